#include "coh/free_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace coh {

std::vector<Word> words_of_degree(const std::vector<int>& gen_degrees, int total_degree) {
    if (total_degree < 0) return {};
    // words[d] = all words of total degree d
    std::vector<std::vector<Word>> words(static_cast<size_t>(total_degree) + 1);
    words[0] = {Word{}};
    for (int d = 1; d <= total_degree; ++d) {
        for (size_t i = 0; i < gen_degrees.size(); ++i) {
            int gd = gen_degrees[i];
            if (gd < 1 || gd > d) continue;
            for (const Word& tail : words[static_cast<size_t>(d - gd)]) {
                Word w;
                w.reserve(tail.size() + 1);
                w.push_back(static_cast<int>(i));
                w.insert(w.end(), tail.begin(), tail.end());
                words[static_cast<size_t>(d)].push_back(std::move(w));
            }
        }
    }
    auto out = std::move(words[static_cast<size_t>(total_degree)]);
    std::sort(out.begin(), out.end(), WordLess{});
    return out;
}

void AlgElement::add_term(const Word& w, const Scalar& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        terms_.emplace(w, c);
        return;
    }
    Scalar sum = it->second + c;
    if (sum.is_zero())
        terms_.erase(it);
    else
        it->second = sum;
}

AlgElement AlgElement::scaled(const Scalar& c) const {
    AlgElement r(degree_);
    if (c.is_zero()) return r;
    for (const auto& [w, x] : terms_) r.add_term(w, x * c);
    return r;
}

AlgElement operator+(const AlgElement& a, const AlgElement& b) {
    if (a.degree() != b.degree()) throw precondition_error("adding elements of different degrees");
    AlgElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, c);
    return r;
}

AlgElement operator-(const AlgElement& a, const AlgElement& b) {
    if (a.degree() != b.degree()) throw precondition_error("subtracting elements of different degrees");
    AlgElement r = a;
    for (const auto& [w, c] : b.terms_) r.add_term(w, -c);
    return r;
}

bool operator==(const AlgElement& a, const AlgElement& b) {
    return a.degree_ == b.degree_ && a.terms_ == b.terms_;
}

std::string AlgElement::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << c.str() << "*[";
        for (size_t i = 0; i < w.size(); ++i) {
            if (i) os << " ";
            os << w[i];
        }
        os << "]";
    }
    return os.str();
}

FreeAlgebra::FreeAlgebra(std::vector<Generator> gens, Field field, int degree_cap)
    : gens_(std::move(gens)), field_(field), cap_(degree_cap) {
    if (cap_ < 0) throw precondition_error("degree cap must be >= 0");
    for (const Generator& g : gens_)
        if (g.degree < 1)
            throw precondition_error("generator " + g.label + " has degree < 1");
    std::vector<int> degs;
    degs.reserve(gens_.size());
    for (const Generator& g : gens_) degs.push_back(g.degree);
    basis_.resize(static_cast<size_t>(cap_) + 1);
    pos_.resize(static_cast<size_t>(cap_) + 1);
    for (int d = 0; d <= cap_; ++d) {
        basis_[static_cast<size_t>(d)] = words_of_degree(degs, d);
        size_t i = 0;
        for (const Word& w : basis_[static_cast<size_t>(d)])
            pos_[static_cast<size_t>(d)].emplace(w, i++);
    }
}

int FreeAlgebra::word_degree(const Word& w) const {
    int d = 0;
    for (int i : w) d += gens_[static_cast<size_t>(i)].degree;
    return d;
}

const std::vector<Word>& FreeAlgebra::basis(int degree) const {
    if (degree < 0 || degree > cap_)
        throw precondition_error("degree " + std::to_string(degree) + " outside cap");
    return basis_[static_cast<size_t>(degree)];
}

size_t FreeAlgebra::basis_index(int degree, const Word& w) const {
    const auto& m = pos_[static_cast<size_t>(degree)];
    auto it = m.find(w);
    if (it == m.end()) throw std::logic_error("word not in basis");
    return it->second;
}

AlgElement FreeAlgebra::unit() const {
    AlgElement e(0);
    e.add_term(Word{}, field_.one());
    return e;
}

AlgElement FreeAlgebra::generator(size_t i) const {
    if (i >= gens_.size()) throw precondition_error("generator index out of range");
    AlgElement e(gens_[i].degree);
    e.add_term(Word{static_cast<int>(i)}, field_.one());
    return e;
}

size_t FreeAlgebra::generator_index(const std::string& label) const {
    size_t found = gens_.size();
    for (size_t i = 0; i < gens_.size(); ++i) {
        if (gens_[i].label != label) continue;
        if (found != gens_.size())
            throw precondition_error("generator label " + label + " is ambiguous");
        found = i;
    }
    if (found == gens_.size()) throw precondition_error("no generator labeled " + label);
    return found;
}

AlgElement multiply(const FreeAlgebra& a, const AlgElement& x, const AlgElement& y) {
    int d = x.degree() + y.degree();
    if (d > a.degree_cap())
        throw precondition_error("product degree " + std::to_string(d) + " exceeds cap " +
                                 std::to_string(a.degree_cap()));
    AlgElement r(d);
    for (const auto& [wx, cx] : x.terms())
        for (const auto& [wy, cy] : y.terms()) {
            Word w;
            w.reserve(wx.size() + wy.size());
            w.insert(w.end(), wx.begin(), wx.end());
            w.insert(w.end(), wy.begin(), wy.end());
            r.add_term(w, cx * cy);
        }
    return r;
}

AlgElement commutator(const FreeAlgebra& a, const AlgElement& x, const AlgElement& y) {
    AlgElement xy = multiply(a, x, y);
    AlgElement yx = multiply(a, y, x);
    bool odd_sign = (x.degree() % 2 == 1) && (y.degree() % 2 == 1);
    return odd_sign ? xy + yx : xy - yx;
}

AlgElement eval_ad_word(const ProductExpr& w, const FreeAlgebra& a) {
    if (w.is_leaf()) return a.generator(a.generator_index(w.model().label()));
    return commutator(a, eval_ad_word(w.left(), a), eval_ad_word(w.right(), a));
}

namespace {

std::vector<Scalar> coords(const FreeAlgebra& a, const AlgElement& e, int degree) {
    std::vector<Scalar> v(a.basis(degree).size(), a.field().zero());
    for (const auto& [w, c] : e.terms()) v[a.basis_index(degree, w)] = c;
    return v;
}

// Incremental row-echelon container for span computations.
class EchelonSpan {
  public:
    explicit EchelonSpan(const Field& f) : field_(f) {}

    // Returns true when v was independent of the rows seen so far.
    bool insert(std::vector<Scalar> v) {
        for (size_t r = 0; r < rows_.size(); ++r) {
            Scalar lead = v[pivots_[r]];
            if (!lead.is_zero())
                for (size_t j = pivots_[r]; j < v.size(); ++j)
                    v[j] = v[j] - lead * rows_[r][j];
        }
        size_t pivot = v.size();
        for (size_t j = 0; j < v.size(); ++j)
            if (!v[j].is_zero()) {
                pivot = j;
                break;
            }
        if (pivot == v.size()) return false;
        Scalar inv = v[pivot].inverse();
        for (size_t j = pivot; j < v.size(); ++j) v[j] = v[j] * inv;
        rows_.push_back(std::move(v));
        pivots_.push_back(pivot);
        return true;
    }

    size_t rank() const { return rows_.size(); }

  private:
    Field field_;
    std::vector<std::vector<Scalar>> rows_;
    std::vector<size_t> pivots_;
};

}  // namespace

size_t rank_of_span(const FreeAlgebra& a, const std::vector<AlgElement>& elems, int degree) {
    EchelonSpan span(a.field());
    for (const AlgElement& e : elems) {
        if (!e.is_zero() && e.degree() != degree)
            throw precondition_error("rank_of_span: element of degree " +
                                     std::to_string(e.degree()) + " in degree " +
                                     std::to_string(degree));
        span.insert(coords(a, e, degree));
    }
    return span.rank();
}

std::vector<size_t> lie_span_dims(const FreeAlgebra& a, int cap) {
    if (cap > a.degree_cap()) throw precondition_error("cap exceeds algebra cap");
    std::vector<std::vector<AlgElement>> bases(static_cast<size_t>(cap) + 1);
    std::vector<size_t> dims(static_cast<size_t>(cap) + 1, 0);
    for (int d = 1; d <= cap; ++d) {
        std::vector<AlgElement> candidates;
        for (size_t i = 0; i < a.generators().size(); ++i)
            if (a.generators()[i].degree == d) candidates.push_back(a.generator(i));
        for (int lo = 1; 2 * lo <= d; ++lo) {
            int hi = d - lo;
            const auto& bl = bases[static_cast<size_t>(lo)];
            const auto& bh = bases[static_cast<size_t>(hi)];
            if (lo < hi) {
                for (const auto& u : bl)
                    for (const auto& v : bh) candidates.push_back(commutator(a, u, v));
            } else {
                for (size_t i = 0; i < bl.size(); ++i)
                    for (size_t j = i; j < bl.size(); ++j)
                        candidates.push_back(commutator(a, bl[i], bl[j]));
            }
        }
        EchelonSpan span(a.field());
        for (const AlgElement& e : candidates) {
            if (e.is_zero()) continue;
            if (span.insert(coords(a, e, d))) bases[static_cast<size_t>(d)].push_back(e);
        }
        dims[static_cast<size_t>(d)] = bases[static_cast<size_t>(d)].size();
    }
    return std::vector<size_t>(dims.begin() + 1, dims.end());
}

namespace {

long small_count(const Int& v, const std::string& what) {
    if (v < 0 || v > 1000000) throw precondition_error("unreasonable " + what);
    return v.convert_to<long>();
}

// One generator per reduced cell of the model, in loop degrees.
std::vector<Generator> loop_generators_of(const SpaceModel& m, const std::string& prefix, int cap) {
    std::vector<Generator> gens;
    int counter = 1;
    for (int d = 2; d <= m.red.trunc_degree(); ++d) {
        long mult = small_count(m.red[d], "generator multiplicity");
        for (long i = 0; i < mult; ++i, ++counter) {
            if (d - 1 <= cap) gens.push_back({prefix + std::to_string(counter), d - 1});
        }
    }
    return gens;
}

SpaceModel generator_leaf_model(const Generator& g, int trunc_degree) {
    // A single-cell model standing for the generator's sphere, named by the
    // generator so eval_ad_word can resolve leaves.
    TruncSeries red = TruncSeries::monomial(trunc_degree, g.degree + 1);
    return make_space_model(SpaceExpr::named(g.label), std::move(red), g.label);
}

struct BracketElement {
    std::string label;
    int degree;
    AlgElement value;
};

}  // namespace

PbwReport check_pbw_surjectivity(const SpaceModel& g, const SpaceModel& h, int cap,
                                 const Field& field) {
    if (cap < 1 || cap > g.red.trunc_degree())
        throw precondition_error("cap must lie in 1..trunc_degree");

    std::vector<Generator> ggens = loop_generators_of(g, "g", cap);
    std::vector<Generator> hgens = loop_generators_of(h, "h", cap);
    std::vector<Generator> all = ggens;
    all.insert(all.end(), hgens.begin(), hgens.end());
    FreeAlgebra algebra(all, field, cap);

    const int leaf_trunc = cap + 1;

    // Bracket generators: left-normed ad words [x, y_1, ..., y_n] over all
    // tuples of H generators, truncated by total degree.
    std::vector<BracketElement> brackets;
    for (const Generator& x : ggens) {
        struct Item {
            ProductExpr expr;
            int degree;
        };
        std::vector<Item> frontier;
        frontier.push_back({ProductExpr::leaf(generator_leaf_model(x, leaf_trunc)), x.degree});
        while (!frontier.empty()) {
            std::vector<Item> next;
            for (const Item& it : frontier) {
                brackets.push_back({it.expr.label(), it.degree, eval_ad_word(it.expr, algebra)});
                for (const Generator& y : hgens) {
                    int d = it.degree + y.degree;
                    if (d > cap) continue;
                    next.push_back({ProductExpr::circle(it.expr,
                                                        ProductExpr::leaf(generator_leaf_model(y, leaf_trunc))),
                                    d});
                }
            }
            frontier = std::move(next);
        }
    }

    // Monomials in the bracket alphabet, with cached values per word.
    std::vector<int> bracket_degrees;
    bracket_degrees.reserve(brackets.size());
    for (const auto& b : brackets) bracket_degrees.push_back(b.degree);
    std::vector<int> h_degrees;
    std::vector<size_t> h_index;  // position in the algebra generator list
    for (size_t i = 0; i < hgens.size(); ++i) {
        h_degrees.push_back(hgens[i].degree);
        h_index.push_back(ggens.size() + i);
    }

    PbwReport report;
    report.generators = all;
    for (const auto& b : brackets) report.bracket_labels.push_back(b.label);
    report.pass = true;

    for (int n = 1; n <= cap; ++n) {
        const size_t dim = algebra.basis(n).size();
        std::vector<AlgElement> products;
        for (int dw = 0; dw <= n; ++dw) {
            std::vector<Word> wwords = words_of_degree(bracket_degrees, dw);
            if (wwords.empty()) continue;
            std::vector<Word> hwords = words_of_degree(h_degrees, n - dw);
            if (hwords.empty()) continue;
            for (const Word& ww : wwords) {
                AlgElement wval = algebra.unit();
                for (int bi : ww) wval = multiply(algebra, wval, brackets[static_cast<size_t>(bi)].value);
                for (const Word& hw : hwords) {
                    AlgElement hval(n - dw);
                    Word word;
                    for (int hi : hw) word.push_back(static_cast<int>(h_index[static_cast<size_t>(hi)]));
                    hval.add_term(word, field.one());
                    products.push_back(multiply(algebra, wval, hval));
                }
            }
        }
        size_t rank = rank_of_span(algebra, products, n);
        bool pass = products.size() == dim && rank == dim;
        report.rows.push_back({n, dim, products.size(), rank, pass});
        report.pass = report.pass && pass;
    }
    return report;
}

}  // namespace coh
