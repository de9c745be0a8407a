#include "grltk/gf.hpp"

#include <algorithm>
#include <cctype>

namespace grltk {
namespace {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint32_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// Residue polynomials over GF(p), little-endian coefficients.
using Poly = std::vector<std::uint32_t>;

Poly decode(Fe code, std::uint32_t p, std::uint32_t m) {
    Poly c(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) {
        c[i] = code % p;
        code /= p;
    }
    return c;
}

Fe encode(const Poly& c, std::uint32_t p) {
    Fe code = 0;
    for (std::size_t i = c.size(); i-- > 0;) code = code * p + c[i];
    return code;
}

std::size_t degree(const Poly& c) {
    std::size_t d = c.size();
    while (d > 0 && c[d - 1] == 0) --d;
    return d;  // number of coefficients up to the leading nonzero; 0 means zero poly
}

// Remainder of a by the monic polynomial b (in place on a copy).
Poly poly_rem(Poly a, const Poly& b, std::uint32_t p) {
    std::size_t db = degree(b);
    for (std::size_t da = degree(a); da >= db && da > 0; da = degree(a)) {
        std::uint32_t c = a[da - 1];
        std::size_t shift = da - db;
        for (std::size_t i = 0; i < db; ++i)
            a[i + shift] = (a[i + shift] + p * p - c * b[i] % p) % p;
    }
    a.resize(db > 0 ? db - 1 : 0);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly r(a.size() + b.size(), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    }
    return r;
}

// Trial division against all monic polynomials of degree <= m/2.
bool is_irreducible(const Poly& mod, std::uint32_t p) {
    std::uint32_t m = static_cast<std::uint32_t>(mod.size()) - 1;
    if (m == 0) return false;
    if (mod[0] == 0 && m > 1) return false;  // divisible by x
    for (std::uint32_t d = 1; 2 * d <= m; ++d) {
        std::uint64_t count = 1;
        for (std::uint32_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t t = 0; t < count; ++t) {
            Poly div = decode(static_cast<Fe>(t), p, d);
            div.push_back(1);  // monic
            if (degree(poly_rem(mod, div, p)) == 0) return false;
        }
    }
    return true;
}

}  // namespace

FieldPtr FieldCtx::make(std::uint32_t p, std::uint32_t m,
                        std::optional<std::vector<std::uint32_t>> modulus) {
    if (!is_prime(p)) fail(Errc::NotPrime, std::to_string(p) + " is not prime");
    if (m < 1) fail(Errc::ReducibleModulus, "extension degree must be >= 1");

    std::uint64_t q64 = 1;
    for (std::uint32_t i = 0; i < m; ++i) q64 *= p;

    auto ctx = std::shared_ptr<FieldCtx>(new FieldCtx());
    ctx->p_ = p;
    ctx->m_ = m;

    if (modulus) {
        if (modulus->size() != m + 1 || modulus->back() != 1)
            fail(Errc::ReducibleModulus, "modulus must be monic of degree m");
        for (auto c : *modulus)
            if (c >= p) fail(Errc::ReducibleModulus, "modulus coefficient out of range");
        if (m > 1 && !is_irreducible(*modulus, p))
            fail(Errc::ReducibleModulus, "modulus is reducible over GF(p)");
        ctx->modulus_ = *modulus;
    } else {
        if (q64 > 4096)
            fail(Errc::UnsupportedSize,
                 "p^m = " + std::to_string(q64) + " exceeds the default modulus table; pass a modulus");
        if (m == 1) {
            ctx->modulus_ = {0, 1};  // x, i.e. plain residues mod p
        } else {
            // Lexicographically least monic irreducible of degree m, ordered by
            // the packed code of the low coefficients.
            bool found = false;
            for (std::uint64_t t = 0; t < q64 && !found; ++t) {
                Poly cand = decode(static_cast<Fe>(t), p, m);
                cand.push_back(1);
                if (is_irreducible(cand, p)) {
                    ctx->modulus_ = cand;
                    found = true;
                }
            }
            if (!found) fail(Errc::UnsupportedSize, "no irreducible modulus found");  // cannot happen
        }
    }

    if (q64 > (1u << 24)) fail(Errc::UnsupportedSize, "field too large for table-based arithmetic");
    ctx->q_ = static_cast<std::uint32_t>(q64);

    // Raw table-free multiply used only during construction.
    auto raw_mul = [&](Fe a, Fe b) -> Fe {
        Poly r = poly_mul(decode(a, p, m), decode(b, p, m), p);
        r = poly_rem(std::move(r), ctx->modulus_, p);
        r.resize(m, 0);
        return encode(r, p);
    };

    // Smallest element of multiplicative order exactly q-1.
    std::uint32_t qm1 = ctx->q_ - 1;
    for (Fe cand = 1; cand < ctx->q_; ++cand) {
        Fe x = cand;
        std::uint32_t ord = 1;
        while (x != 1) {
            x = raw_mul(x, cand);
            ++ord;
            if (ord > qm1) break;
        }
        if (ord == qm1) {
            ctx->gen_ = cand;
            break;
        }
    }

    ctx->exp_.resize(qm1);
    ctx->log_.assign(ctx->q_, 0);
    Fe x = 1;
    for (std::uint32_t i = 0; i < qm1; ++i) {
        ctx->exp_[i] = x;
        ctx->log_[x] = i;
        x = raw_mul(x, ctx->gen_);
    }
    return ctx;
}

Fe FieldCtx::add(Fe a, Fe b) const {
    check(a);
    check(b);
    if (m_ == 1) return (a + b) % p_;
    Fe r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return r;
}

Fe FieldCtx::neg(Fe a) const {
    check(a);
    if (m_ == 1) return (p_ - a) % p_;
    Fe r = 0, mult = 1;
    for (std::uint32_t i = 0; i < m_; ++i) {
        r += (p_ - a % p_) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return r;
}

Fe FieldCtx::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe FieldCtx::mul(Fe a, Fe b) const {
    check(a);
    check(b);
    if (a == 0 || b == 0) return 0;
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) + log_[b];
    return exp_[s % (q_ - 1)];
}

Fe FieldCtx::inv(Fe a) const {
    check(a);
    if (a == 0) fail(Errc::DivisionByZero, "inverse of zero");
    return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

Fe FieldCtx::div(Fe a, Fe b) const { return mul(a, inv(b)); }

Fe FieldCtx::pow(Fe a, std::int64_t e) const {
    check(a);
    if (a == 0) {
        if (e > 0) return 0;
        if (e == 0) return 1;
        fail(Errc::DivisionByZero, "zero to a negative power");
    }
    std::int64_t qm1 = q_ - 1;
    std::int64_t r = ((e % qm1) + qm1) % qm1;
    std::uint64_t s = static_cast<std::uint64_t>(log_[a]) * static_cast<std::uint64_t>(r);
    return exp_[s % static_cast<std::uint64_t>(qm1)];
}

Fe FieldCtx::from_int(std::int64_t v) const {
    std::int64_t r = ((v % p_) + p_) % p_;
    return static_cast<Fe>(r);
}

std::vector<Fe> FieldCtx::sqrt(Fe a) const {
    check(a);
    std::vector<Fe> roots;
    for (Fe r = 0; r < q_; ++r)
        if (mul(r, r) == a) roots.push_back(r);
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;  // 0, 1 (char 2 or a=0) or 2 roots
}

Fe FieldCtx::parse(const std::string& text) const {
    if (text.empty()) fail(Errc::ParseError, "empty element text");
    if (text[0] == 'w') {
        std::int64_t e = 1;
        if (text.size() > 1) {
            if (text[1] != '^' || text.size() == 2) fail(Errc::ParseError, "bad element text: " + text);
            e = 0;
            for (std::size_t i = 2; i < text.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(text[i])))
                    fail(Errc::ParseError, "bad element text: " + text);
                e = e * 10 + (text[i] - '0');
                if (e > (1ll << 40)) e %= (q_ - 1);  // keep the accumulator small
            }
        }
        return pow(gen_, e);  // exponent reduces mod q-1, never an error
    }
    std::uint64_t v = 0;
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c))) fail(Errc::ParseError, "bad element text: " + text);
        v = v * 10 + static_cast<std::uint64_t>(c - '0');
        if (v > (1ull << 40)) fail(Errc::ParseError, "element code too large: " + text);
    }
    if (m_ == 1) return static_cast<Fe>(v % p_);
    if (v >= q_) fail(Errc::ParseError, "element code " + text + " out of range for q=" + std::to_string(q_));
    return static_cast<Fe>(v);
}

std::string FieldCtx::format(Fe a) const {
    check(a);
    if (m_ == 1) return std::to_string(a);
    if (a == 0) return "0";
    std::uint32_t e = log_[a];
    if (e == 0) return "1";
    if (e == 1) return "w";
    return "w^" + std::to_string(e);
}

FieldPtr field_new(std::uint32_t p, std::uint32_t m,
                   std::optional<std::vector<std::uint32_t>> modulus) {
    return FieldCtx::make(p, m, std::move(modulus));
}

}  // namespace grltk
