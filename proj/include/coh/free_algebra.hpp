#pragma once

#include "coh/field.hpp"
#include "coh/matrix.hpp"
#include "coh/space.hpp"

#include <map>
#include <string>
#include <vector>

namespace coh {

struct Generator {
    std::string label;
    int degree;  // >= 1
};

/// Word in generator indices.
using Word = std::vector<int>;

/// Length-lexicographic word order: shorter words first, then lexicographic
/// on generator indices.
struct WordLess {
    bool operator()(const Word& a, const Word& b) const {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    }
};

/// All words over the given generator degrees with the given total degree,
/// in length-lexicographic order.
std::vector<Word> words_of_degree(const std::vector<int>& gen_degrees, int total_degree);

/// Homogeneous element of a free associative algebra: a sparse map from
/// monomial words to nonzero scalars, all words of one total degree.
class AlgElement {
  public:
    explicit AlgElement(int degree) : degree_(degree) {}

    int degree() const { return degree_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, Scalar, WordLess>& terms() const { return terms_; }

    /// Accumulates a term, dropping it when the total becomes zero.
    void add_term(const Word& w, const Scalar& c);

    AlgElement scaled(const Scalar& c) const;
    friend AlgElement operator+(const AlgElement& a, const AlgElement& b);
    friend AlgElement operator-(const AlgElement& a, const AlgElement& b);
    friend bool operator==(const AlgElement& a, const AlgElement& b);

    std::string str() const;

  private:
    int degree_;
    std::map<Word, Scalar, WordLess> terms_;
};

/// Free associative algebra over a prime field or the rationals, with all
/// structure truncated at degree_cap. Monomial bases per degree are cached
/// and deterministically ordered.
class FreeAlgebra {
  public:
    FreeAlgebra(std::vector<Generator> gens, Field field, int degree_cap);

    const std::vector<Generator>& generators() const { return gens_; }
    const Field& field() const { return field_; }
    int degree_cap() const { return cap_; }

    int word_degree(const Word& w) const;
    const std::vector<Word>& basis(int degree) const;
    size_t basis_index(int degree, const Word& w) const;

    AlgElement unit() const;
    AlgElement generator(size_t i) const;
    /// Generator index by label; throws unless exactly one generator matches.
    size_t generator_index(const std::string& label) const;

  private:
    std::vector<Generator> gens_;
    Field field_;
    int cap_;
    std::vector<std::vector<Word>> basis_;               // per degree 0..cap
    std::vector<std::map<Word, size_t, WordLess>> pos_;  // word -> basis position
};

/// Concatenation product; degrees must sum to at most the cap.
AlgElement multiply(const FreeAlgebra& a, const AlgElement& x, const AlgElement& y);

/// Graded commutator [x, y] = xy - (-1)^{|x||y|} yx.
AlgElement commutator(const FreeAlgebra& a, const AlgElement& x, const AlgElement& y);

/// Evaluates an iterated circle-product word as an iterated graded
/// commutator; leaves must name single generators of the algebra.
AlgElement eval_ad_word(const ProductExpr& w, const FreeAlgebra& a);

/// Dimension of the span of homogeneous elements of the given degree.
size_t rank_of_span(const FreeAlgebra& a, const std::vector<AlgElement>& elems, int degree);

/// Degreewise dimensions (1..cap) of the Lie subalgebra generated by the
/// algebra generators under the graded commutator: the brute-force free
/// Lie algebra dimensions.
std::vector<size_t> lie_span_dims(const FreeAlgebra& a, int cap);

struct PbwDegreeRow {
    int degree;
    size_t dim;    // dim T(V)_degree
    size_t count;  // number of product labels
    size_t rank;   // rank of the spanned products
    bool pass;     // count == dim && rank == dim
};

struct PbwReport {
    std::vector<Generator> generators;
    std::vector<std::string> bracket_labels;  // the kernel-generator brackets used
    std::vector<PbwDegreeRow> rows;           // degrees 1..cap
    bool pass;
};

/// Verifies the tensor-algebra factorization T(V) = T(W) (x) T(H_*) by brute
/// force: per degree, products of bracket-word monomials (in the images of
/// eval_ad_word) with generator monomials of H both count and span T(V).
PbwReport check_pbw_surjectivity(const SpaceModel& g, const SpaceModel& h, int cap,
                                 const Field& field);

}  // namespace coh
