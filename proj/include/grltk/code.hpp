#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "grltk/matrix.hpp"

namespace grltk {

/// A_w counts the codewords of Hamming weight w, 0 <= w <= n.
struct WeightEnumerator {
    std::vector<std::uint64_t> counts;
    bool operator==(const WeightEnumerator&) const = default;
};

inline constexpr std::uint64_t kDefaultBudget = 2'000'000;

/// A length-n dimension-k linear code held in canonical RREF generator form,
/// so equal row spaces compare equal. Analysis results are cached behind a
/// shared handle; the code value itself is immutable.
class LinearCode {
  public:
    const FieldPtr& ctx() const { return gen_.ctx(); }
    std::size_t n() const { return gen_.cols(); }
    std::size_t k() const { return gen_.rows(); }
    const Mat& gen() const { return gen_; }

    bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }

    friend LinearCode code_from_generator(const Mat& g);
    friend std::size_t min_distance(const LinearCode& c, std::uint64_t budget);
    friend WeightEnumerator weight_enumerator(const LinearCode& c, std::uint64_t budget, unsigned threads);
    friend std::size_t schur_square_dim(const LinearCode& c);
    friend LinearCode dual_code(const LinearCode& c);

  private:
    explicit LinearCode(Mat gen) : gen_(std::move(gen)), cache_(std::make_shared<Cache>()) {}

    struct Cache {
        std::optional<WeightEnumerator> wef;
        std::optional<std::size_t> schur_dim;
        std::optional<Mat> parity;
    };

    Mat gen_;
    std::shared_ptr<Cache> cache_;
};

/// Canonicalizes any spanning matrix; rank-deficient input is fine, rank 0 is
/// a ZeroCode error.
LinearCode code_from_generator(const Mat& g);

LinearCode dual_code(const LinearCode& c);

/// Exact minimum nonzero weight by projective enumeration (one codeword per
/// scalar class). Requires (q^k - 1)/(q - 1) <= budget.
std::size_t min_distance(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

/// Exact weight counts; per-class counts scaled by q-1 for w >= 1.
/// threads = 0 picks the hardware concurrency.
WeightEnumerator weight_enumerator(const LinearCode& c, std::uint64_t budget = kDefaultBudget,
                                   unsigned threads = 0);

enum class CodeClass { MDS, AMDS, NMDS, Other };

struct Classification {
    CodeClass cls;
    std::size_t d;
};

/// MDS iff d = n-k+1, AMDS iff d = n-k; NMDS refines AMDS when the dual is
/// AMDS too.
Classification classify(const LinearCode& c, std::uint64_t budget = kDefaultBudget);

const char* code_class_name(CodeClass c);

/// Dimension of the span of all componentwise products of generator-row
/// pairs. GRS codes give min(n, 2k-1); anything larger certifies non-GRS.
std::size_t schur_square_dim(const LinearCode& c);

struct NonGrsWitness {
    bool certified;  // sound proof of non-GRS; false is inconclusive
    std::size_t schur_dim;
    std::size_t threshold;  // 2k-1
};

NonGrsWitness non_grs_witness(const LinearCode& c);

bool is_self_dual(const LinearCode& c);

/// Column j of the result is column perm[j] of c scaled by scale[j].
LinearCode apply_monomial(const LinearCode& c, std::span<const std::size_t> perm,
                          std::span<const Fe> scale);

}  // namespace grltk
