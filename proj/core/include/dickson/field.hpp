#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace dickson {

/// Element of GF(p^e): residues mod p in the polynomial basis, low degree
/// first. The vector length always equals the extension degree of the field
/// the element belongs to.
struct FieldElem {
    std::vector<uint32_t> coeffs;

    friend bool operator==(const FieldElem&, const FieldElem&) = default;
};

/// Thrown by the evaluation, permutation and sum layers when handed a field
/// of characteristic 2, where the third-kind family degenerates.
class CharacteristicTwoError : public std::domain_error {
  public:
    CharacteristicTwoError()
        : std::domain_error("characteristic 2 collapses to first kind")
    {
    }
};

/// GF(p^e) with a deterministic field model: the modulus is the monic
/// irreducible of degree e over GF(p) whose coefficient vector, read
/// low-to-high as a base-p integer, is smallest (for e = 1 it is x).
///
/// Field is an immutable value; copies share the underlying representation
/// and all operations are pure, so instances may be used freely from
/// multiple threads.
class Field {
  public:
    /// Constructs GF(p^e). Requires p prime, e >= 1 and p^e <= 2^16.
    static Field make(uint32_t p, uint32_t e);

    uint32_t characteristic() const { return rep_->p; }
    uint32_t degree() const { return rep_->e; }
    uint64_t order() const { return rep_->q; }

    /// Modulus coefficients, constant term first, length degree()+1, monic.
    const std::vector<uint32_t>& modulus() const { return rep_->modulus; }

    /// "7" for prime fields, "3^2" for extensions.
    std::string label() const;

    FieldElem zero() const;
    FieldElem one() const;

    /// Embeds n mod p as a constant of the prime subfield.
    FieldElem from_int(uint64_t n) const;

    /// Validates length and residue ranges.
    FieldElem from_coeffs(std::vector<uint32_t> coeffs) const;

    FieldElem add(const FieldElem& a, const FieldElem& b) const;
    FieldElem sub(const FieldElem& a, const FieldElem& b) const;
    FieldElem neg(const FieldElem& a) const;
    FieldElem mul(const FieldElem& a, const FieldElem& b) const;

    /// Multiplicative inverse; throws std::domain_error on zero.
    FieldElem inv(const FieldElem& a) const;

    /// Square-and-multiply; pow(a, 0) == 1 for every a including zero.
    FieldElem pow(const FieldElem& a, uint64_t n) const;

    /// Canonical square root: the root whose coefficient vector is smaller
    /// as a base-p integer, or absent when a is a non-square. Exhaustive
    /// scan; adequate for q <= 2^16.
    std::optional<FieldElem> sqrt(const FieldElem& a) const;

    bool is_zero(const FieldElem& a) const;
    bool is_one(const FieldElem& a) const;

    /// True when all coefficients above the constant vanish.
    bool in_prime_subfield(const FieldElem& a) const;

    /// Constant term; meaningful together with in_prime_subfield.
    uint32_t constant_term(const FieldElem& a) const { return a.coeffs[0]; }

    /// All q elements in ascending base-p coefficient order.
    std::vector<FieldElem> enumerate() const;

    /// Position of a in the enumerate() order: sum of coeffs[i] * p^i.
    uint64_t index_of(const FieldElem& a) const;

    /// Inverse of index_of.
    FieldElem element_at(uint64_t index) const;

    friend bool operator==(const Field& a, const Field& b)
    {
        return a.rep_->p == b.rep_->p && a.rep_->e == b.rep_->e;
    }

  private:
    struct Rep {
        uint32_t p;
        uint32_t e;
        uint64_t q;
        std::vector<uint32_t> modulus;
    };

    explicit Field(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

    std::shared_ptr<const Rep> rep_;
};

/// Parses "7" or "3^2" into a field; a bare composite order q is accepted
/// when q is a proper prime power (it is factored as p^e).
Field field_from_text(const std::string& text);

/// Field of order q; q must be a prime power.
Field field_from_order(uint64_t q);

/// GF(q^2) together with the canonical embedding of GF(q).
///
/// The extension is GF(p)[t]/(m) with deg m = 2e chosen by the same
/// smallest-encoding rule as Field::make. The embedding sends the base
/// generator to the smallest root of the base modulus in the extension,
/// which makes it an injective field homomorphism.
class QuadExt {
  public:
    explicit QuadExt(const Field& base);

    const Field& base() const { return base_; }
    const Field& ext() const { return ext_; }

    FieldElem embed(const FieldElem& a) const;

    /// True when x lies in the image of the embedding.
    bool is_embedded(const FieldElem& x) const;

    /// Preimage under the embedding, or absent.
    std::optional<FieldElem> try_project(const FieldElem& x) const;

    /// Preimage under the embedding; throws std::logic_error when x is
    /// outside the embedded copy of the base field.
    FieldElem project(const FieldElem& x) const;

  private:
    Field base_;
    Field ext_;
    FieldElem root_;                               // image of the base generator
    std::vector<FieldElem> image_;                 // base index -> ext element
    std::unordered_map<uint64_t, uint64_t> back_;  // ext index -> base index
};

/// Quadratic extension of the given field (requires odd characteristic).
QuadExt quad_ext(const Field& field);

}  // namespace dickson
