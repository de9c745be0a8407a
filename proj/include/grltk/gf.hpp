#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "grltk/errors.hpp"

namespace grltk {

/// Canonical element code: base-p digits (little-endian) of the residue
/// polynomial packed into one integer in [0, q).
using Fe = std::uint32_t;

class FieldCtx;
using FieldPtr = std::shared_ptr<const FieldCtx>;

/// A finite field GF(p^m), immutable after construction. All arithmetic is
/// exact; extension fields use log/antilog tables over a monic irreducible
/// modulus. Fields up to q = 4096 are supported with the default modulus;
/// larger extensions need an explicit modulus.
class FieldCtx {
  public:
    /// Builds GF(p^m). With no modulus the lexicographically least monic
    /// irreducible of degree m over GF(p) is used (deterministic, so equal
    /// inputs always give the identical field presentation).
    static FieldPtr make(std::uint32_t p, std::uint32_t m,
                         std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t p() const { return p_; }
    std::uint32_t m() const { return m_; }
    std::uint32_t q() const { return q_; }
    /// Little-endian coefficients of the monic degree-m modulus (length m+1).
    const std::vector<std::uint32_t>& modulus() const { return modulus_; }
    /// A fixed multiplicative generator (order q-1), smallest by element code.
    Fe gen() const { return gen_; }

    bool same_field(const FieldCtx& other) const {
        return p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_;
    }

    Fe zero() const { return 0; }
    Fe one() const { return 1; }

    Fe add(Fe a, Fe b) const;
    Fe sub(Fe a, Fe b) const;
    Fe neg(Fe a) const;
    Fe mul(Fe a, Fe b) const;
    Fe inv(Fe a) const;
    Fe div(Fe a, Fe b) const;
    /// Any integer exponent; negative exponents invert first (a must be
    /// nonzero in that case). pow(0, 0) = 1.
    Fe pow(Fe a, std::int64_t e) const;

    Fe from_int(std::int64_t v) const;  // reduce an integer mod p, embed as constant

    /// Square roots of a by exhaustion: {} if a is a non-residue, {r} in
    /// characteristic 2, else {r, -r} with r the smaller element code.
    std::vector<Fe> sqrt(Fe a) const;

    /// Text forms: decimal element codes always parse; "w", "w^k" denote
    /// powers of gen() with the exponent reduced mod q-1.
    Fe parse(const std::string& text) const;
    /// Prime fields format as decimal codes; extension fields as
    /// "0"/"1"/"w"/"w^k". parse(format(a)) == a.
    std::string format(Fe a) const;

  private:
    FieldCtx() = default;
    void check(Fe a) const {
        if (a >= q_) fail(Errc::FieldMismatch, "element code " + std::to_string(a) + " out of range for q=" + std::to_string(q_));
    }

    std::uint32_t p_ = 0, m_ = 0, q_ = 0;
    std::vector<std::uint32_t> modulus_;
    Fe gen_ = 0;
    // log_[a] for a != 0 is the discrete log base gen_; exp_[i] = gen_^i.
    std::vector<std::uint32_t> log_, exp_;
};

/// Module entry point mirroring the library surface: p prime, m >= 1.
FieldPtr field_new(std::uint32_t p, std::uint32_t m,
                   std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

}  // namespace grltk
