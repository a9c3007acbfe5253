#include "coh/io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

namespace coh {

namespace {

long to_long(const Json& v, const std::string& what) {
    if (!v.is_number_integer()) throw precondition_error("expected integer for " + what);
    return v.get<long>();
}

}  // namespace

Json series_to_json(const TruncSeries& s) {
    Json arr = Json::array();
    for (int n = 0; n <= s.trunc_degree(); ++n) arr.push_back(s[n].str());
    return arr;
}

SpaceModel space_from_json(const Json& doc, int trunc_degree) {
    if (!doc.is_object()) throw precondition_error("space document must be a JSON object");
    std::string name = doc.value("name", std::string{});
    if (doc.contains("spheres")) {
        if (!doc["spheres"].is_array()) throw precondition_error("\"spheres\" must be an array");
        std::vector<int> degrees;
        for (const auto& v : doc["spheres"]) degrees.push_back(static_cast<int>(to_long(v, "sphere degree")));
        SpaceModel m = from_spheres(trunc_degree, degrees);
        m.name = name;
        return m;
    }
    if (doc.contains("reduced_dims")) {
        if (!doc["reduced_dims"].is_object())
            throw precondition_error("\"reduced_dims\" must be an object");
        std::map<int, long> dims;
        for (const auto& [k, v] : doc["reduced_dims"].items()) {
            int deg;
            try {
                deg = std::stoi(k);
            } catch (const std::logic_error&) {
                throw precondition_error("bad degree key: " + k);
            }
            dims[deg] = to_long(v, "rank");
        }
        return from_reduced_dims(trunc_degree, dims, name);
    }
    throw precondition_error("space document needs \"spheres\" or \"reduced_dims\"");
}

SpaceModel load_space(const std::string& path, int trunc_degree) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open " + path);
    Json doc = Json::parse(in);  // throws nlohmann parse_error on bad input
    return space_from_json(doc, trunc_degree);
}

GradedEndo endo_from_json(const Json& doc, const Field& field) {
    if (!doc.is_object() || !doc.contains("matrices") || !doc["matrices"].is_object())
        throw precondition_error("endomorphism document needs a \"matrices\" object");
    int top = 0;
    std::map<int, Mat> blocks;
    for (const auto& [k, rows] : doc["matrices"].items()) {
        int deg;
        try {
            deg = std::stoi(k);
        } catch (const std::logic_error&) {
            throw precondition_error("bad degree key: " + k);
        }
        if (deg < 0) throw precondition_error("negative degree key");
        if (!rows.is_array()) throw precondition_error("matrix for degree " + k + " must be an array");
        Mat m;
        for (const auto& row : rows) {
            if (!row.is_array()) throw precondition_error("matrix rows must be arrays");
            std::vector<Scalar> r;
            for (const auto& v : row) r.push_back(field.of(to_long(v, "matrix entry")));
            m.push_back(std::move(r));
        }
        for (const auto& r : m)
            if (r.size() != m.size())
                throw precondition_error("matrix for degree " + k + " is not square");
        top = std::max(top, deg);
        blocks[deg] = std::move(m);
    }
    std::vector<Mat> out(static_cast<size_t>(top) + 1);
    for (auto& [deg, m] : blocks) out[static_cast<size_t>(deg)] = std::move(m);
    return GradedEndo(field, std::move(out));
}

GradedEndo load_endo(const std::string& path, const Field& field) {
    std::ifstream in(path);
    if (!in) throw precondition_error("cannot open " + path);
    Json doc = Json::parse(in);
    return endo_from_json(doc, field);
}

namespace {

Json term_to_json(const WedgeTerm& t) {
    auto conn = connectivity_within(t.expr);
    Json j;
    j["label"] = t.expr.label();
    j["length"] = t.expr.length();
    j["bottom_degree"] = conn ? Json(*conn + 1) : Json(nullptr);
    j["multiplicity"] = t.multiplicity;
    return j;
}

Json peeled_to_json(const PeeledTerm& t) {
    auto conn = connectivity_within(t.expr);
    Json j;
    j["label"] = t.expr.label();
    j["length"] = t.expr.length();
    j["bottom_degree"] = conn ? Json(*conn + 1) : Json(nullptr);
    j["multiplicity"] = t.multiplicity;
    return j;
}

}  // namespace

Json identity_report_to_json(const IdentityReport& r, int trunc_degree) {
    Json j;
    j["identity"] = r.identity;
    j["trunc_degree"] = trunc_degree;
    j["lhs"] = {{"description", r.lhs_desc}, {"coeffs", series_to_json(r.lhs)}};
    j["rhs"] = {{"description", r.rhs_desc}, {"coeffs", series_to_json(r.rhs)}};
    j["verdict"] = r.equal ? "equal" : "unequal";
    Json terms = Json::array();
    for (const auto& t : r.terms) terms.push_back(term_to_json(t));
    j["terms"] = std::move(terms);
    return j;
}

Json kernel_report_to_json(const KernelIdentityReport& r) {
    Json j;
    j["identity"] = "lie_kernel_factorization";
    j["lhs"] = {{"description", "1/(1-(g+h))"}, {"coeffs", series_to_json(r.lhs)}};
    j["rhs"] = {{"description", "1/(1-g/(1-h)) * 1/(1-h)"}, {"coeffs", series_to_json(r.rhs)}};
    j["verdict"] = r.equal ? "equal" : "unequal";
    return j;
}

Json pbw_report_to_json(const PbwReport& r, const Field& field) {
    Json j;
    j["field"] = field.name();
    Json gens = Json::array();
    for (const auto& g : r.generators) gens.push_back({{"label", g.label}, {"degree", g.degree}});
    j["generators"] = std::move(gens);
    j["bracket_labels"] = r.bracket_labels;
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"degree", row.degree},
                        {"dimension", row.dim},
                        {"count", row.count},
                        {"rank", row.rank},
                        {"verdict", row.pass ? "pass" : "fail"}});
    j["degrees"] = std::move(rows);
    j["verdict"] = r.pass ? "pass" : "fail";
    return j;
}

Json split_report_to_json(const TelescopeSplitReport& r) {
    Json j;
    Json rows = Json::array();
    for (const auto& row : r.rows)
        rows.push_back({{"degree", row.degree},
                        {"dim", row.dim},
                        {"rank", row.rank},
                        {"nullity", row.nullity},
                        {"telescope_e", row.tele_e.str()},
                        {"telescope_1_plus_e", row.tele_one_plus_e.str()},
                        {"verdict", row.pass ? "pass" : "fail"}});
    j["degrees"] = std::move(rows);
    j["verdict"] = r.pass ? "pass" : "fail";
    return j;
}

Json swap_report_to_json(const TelescopeSwapReport& r) {
    Json j;
    j["telescope_f1f2"] = series_to_json(r.lhs);
    j["telescope_f2f1"] = series_to_json(r.rhs);
    j["verdict"] = r.equal ? "equal" : "unequal";
    return j;
}

Json circle_report_to_json(const CircleTelescopeReport& r) {
    Json j;
    j["quasi_unit"] = r.quasi_unit;
    j["quasi_relation"] = r.quasi_ok ? "pass" : "fail";
    j["telescope_dims"] = series_to_json(r.image_dims);
    j["expected_image"] = series_to_json(r.expected_image);
    j["complement_dims"] = series_to_json(r.complement_dims);
    j["expected_complement"] = series_to_json(r.expected_complement);
    j["total_dims"] = series_to_json(r.total_dims);
    j["verdict"] = r.pass ? "pass" : "fail";
    return j;
}

Json peel_state_to_json(const PeelState& s) {
    Json j;
    j["k"] = s.k;
    Json peeled = Json::array();
    for (const auto& t : s.peeled) peeled.push_back(peeled_to_json(t));
    j["peeled"] = std::move(peeled);
    Json residual = Json::array();
    for (const auto& t : s.residual) residual.push_back(peeled_to_json(t));
    j["residual"] = std::move(residual);
    j["residual_series"] = series_to_json(s.residual_series);
    j["conservation"] = s.conservation_ok ? "pass" : "fail";
    return j;
}

uint64_t fnv1a64(const std::string& data) {
    uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

std::string report_filename(const std::string& subcommand, const std::string& canonical) {
    std::ostringstream os;
    os << subcommand << "_" << std::hex << fnv1a64(subcommand + "\n" + canonical) << ".json";
    return os.str();
}

void write_json_file(const std::string& path, const Json& j) {
    std::filesystem::path p(path);
    if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
    std::ofstream out(p);
    if (!out) throw precondition_error("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace coh
