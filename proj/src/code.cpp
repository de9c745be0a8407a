#include "grltk/code.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace grltk {
namespace {

std::uint64_t pow_u64(std::uint64_t b, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

// Number of projective scalar classes of nonzero messages.
std::uint64_t class_count(std::uint64_t q, std::size_t k) {
    return (pow_u64(q, k) - 1) / (q - 1);
}

// Weight histogram over all class representatives (messages whose leading
// nonzero coordinate is 1), one worker per index slice. The merge is a plain
// sum, so the result does not depend on the slicing.
std::vector<std::uint64_t> representative_weights(const Mat& gen, unsigned threads) {
    const auto& F = *gen.ctx();
    const std::size_t k = gen.rows(), n = gen.cols();
    const std::uint64_t q = F.q();
    const std::uint64_t total = class_count(q, k);

    // Representatives with leading position j occupy a contiguous index block
    // of size q^(k-j-1); blocks are ordered by increasing j.
    std::vector<std::uint64_t> block_start(k + 1, 0);
    for (std::size_t j = 0; j < k; ++j) block_start[j + 1] = block_start[j] + pow_u64(q, k - j - 1);

    auto run = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& hist) {
        std::vector<Fe> word(n);
        std::vector<Fe> msg(k);
        for (std::uint64_t idx = lo; idx < hi; ++idx) {
            std::size_t j = 0;
            while (block_start[j + 1] <= idx) ++j;
            std::uint64_t t = idx - block_start[j];
            std::fill(msg.begin(), msg.end(), 0);
            msg[j] = 1;
            for (std::size_t i = k; i-- > j + 1;) {
                msg[i] = static_cast<Fe>(t % q);
                t /= q;
            }
            std::fill(word.begin(), word.end(), 0);
            for (std::size_t i = j; i < k; ++i) {
                if (msg[i] == 0) continue;
                for (std::size_t c = 0; c < n; ++c)
                    word[c] = F.add(word[c], F.mul(msg[i], gen.at(i, c)));
            }
            std::size_t w = 0;
            for (Fe v : word) w += (v != 0);
            ++hist[w];
        }
    };

    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (total < 1u << 15) threads = 1;

    std::vector<std::vector<std::uint64_t>> hists(threads, std::vector<std::uint64_t>(n + 1, 0));
    if (threads == 1) {
        run(0, total, hists[0]);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (total + threads - 1) / threads;
        for (unsigned t = 0; t < threads; ++t) {
            std::uint64_t lo = std::min<std::uint64_t>(t * chunk, total);
            std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
            pool.emplace_back(run, lo, hi, std::ref(hists[t]));
        }
        for (auto& th : pool) th.join();
    }
    for (unsigned t = 1; t < threads; ++t)
        for (std::size_t w = 0; w <= n; ++w) hists[0][w] += hists[t][w];
    return hists[0];
}

void check_budget(const LinearCode& c, std::uint64_t budget) {
    std::uint64_t need = class_count(c.ctx()->q(), c.k());
    if (need > budget)
        fail(Errc::BudgetExceeded, "enumeration needs " + std::to_string(need) +
                                       " projective classes, budget is " + std::to_string(budget));
}

}  // namespace

LinearCode code_from_generator(const Mat& g) {
    Elimination e = eliminate(g);
    if (e.rank == 0) fail(Errc::ZeroCode, "generator has rank 0");
    std::vector<std::size_t> keep(e.rank);
    std::iota(keep.begin(), keep.end(), 0);
    std::vector<std::size_t> all_cols(g.cols());
    std::iota(all_cols.begin(), all_cols.end(), 0);
    return LinearCode(e.rref.submatrix(keep, all_cols));
}

LinearCode dual_code(const LinearCode& c) {
    if (!c.cache_->parity) c.cache_->parity = nullspace(c.gen());
    if (c.cache_->parity->rows() == 0) fail(Errc::ZeroCode, "dual of the full space is the zero code");
    return code_from_generator(*c.cache_->parity);
}

WeightEnumerator weight_enumerator(const LinearCode& c, std::uint64_t budget, unsigned threads) {
    if (c.cache_->wef) return *c.cache_->wef;
    check_budget(c, budget);
    auto hist = representative_weights(c.gen(), threads);
    WeightEnumerator wef;
    wef.counts.assign(c.n() + 1, 0);
    wef.counts[0] = 1;
    std::uint64_t qm1 = c.ctx()->q() - 1;
    for (std::size_t w = 1; w <= c.n(); ++w) wef.counts[w] = hist[w] * qm1;
    c.cache_->wef = wef;
    return wef;
}

std::size_t min_distance(const LinearCode& c, std::uint64_t budget) {
    auto wef = weight_enumerator(c, budget);
    for (std::size_t w = 1; w < wef.counts.size(); ++w)
        if (wef.counts[w] != 0) return w;
    fail(Errc::ZeroCode, "no nonzero codeword");  // unreachable: k >= 1
}

Classification classify(const LinearCode& c, std::uint64_t budget) {
    std::size_t d = min_distance(c, budget);
    std::size_t n = c.n(), k = c.k();
    if (d == n - k + 1) return {CodeClass::MDS, d};
    if (d == n - k) {
        if (k < n) {
            LinearCode dual = dual_code(c);
            std::size_t dd = min_distance(dual, budget);
            if (dd == n - dual.k()) return {CodeClass::NMDS, d};
        }
        return {CodeClass::AMDS, d};
    }
    return {CodeClass::Other, d};
}

const char* code_class_name(CodeClass c) {
    switch (c) {
        case CodeClass::MDS: return "MDS";
        case CodeClass::AMDS: return "AMDS";
        case CodeClass::NMDS: return "NMDS";
        case CodeClass::Other: return "other";
    }
    return "?";
}

std::size_t schur_square_dim(const LinearCode& c) {
    if (c.cache_->schur_dim) return *c.cache_->schur_dim;
    const auto& F = *c.ctx();
    std::size_t k = c.k(), n = c.n();
    Mat products(c.ctx(), k * (k + 1) / 2, n);
    std::size_t r = 0;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = i; j < k; ++j, ++r)
            for (std::size_t col = 0; col < n; ++col)
                products.set(r, col, F.mul(c.gen().at(i, col), c.gen().at(j, col)));
    std::size_t dim = eliminate(products).rank;
    c.cache_->schur_dim = dim;
    return dim;
}

NonGrsWitness non_grs_witness(const LinearCode& c) {
    std::size_t threshold = 2 * c.k() - 1;
    std::size_t dim = schur_square_dim(c);
    bool certified = (threshold <= c.n()) && dim > threshold;
    return {certified, dim, threshold};
}

bool is_self_dual(const LinearCode& c) {
    if (c.n() != 2 * c.k()) return false;
    return c.gen().matmul(c.gen().transpose()).is_zero();
}

LinearCode apply_monomial(const LinearCode& c, std::span<const std::size_t> perm,
                          std::span<const Fe> scale) {
    std::size_t n = c.n();
    if (perm.size() != n || scale.size() != n)
        fail(Errc::ShapeMismatch, "monomial map must cover all n coordinates");
    std::vector<bool> seen(n, false);
    for (auto p : perm) {
        if (p >= n || seen[p]) fail(Errc::ShapeMismatch, "perm is not a permutation");
        seen[p] = true;
    }
    for (Fe s : scale)
        if (s == 0) fail(Errc::ZeroScale, "monomial scale entries must be nonzero");
    const auto& F = *c.ctx();
    Mat g(c.ctx(), c.k(), n);
    for (std::size_t i = 0; i < c.k(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            g.set(i, j, F.mul(scale[j], c.gen().at(i, perm[j])));
    return code_from_generator(g);
}

}  // namespace grltk
