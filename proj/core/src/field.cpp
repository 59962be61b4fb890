#include "dickson/field.hpp"

#include <algorithm>
#include <cstddef>

namespace dickson {
namespace {

bool is_prime(uint64_t n)
{
    if (n < 2) return false;
    for (uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) return false;
    }
    return true;
}

// Polynomials over GF(p) as uint32 coefficient vectors, low degree first.
// Used only for modulus construction; element arithmetic lives in Field.

// Remainder of a modulo a monic divisor m.
std::vector<uint32_t> pf_rem(std::vector<uint32_t> a,
                             const std::vector<uint32_t>& m, uint32_t p)
{
    const size_t dm = m.size() - 1;
    while (a.size() > dm) {
        const uint32_t lead = a.back();
        const size_t shift = a.size() - 1 - dm;
        if (lead != 0) {
            for (size_t i = 0; i < dm; ++i) {
                const uint64_t sub = static_cast<uint64_t>(lead) * m[i] % p;
                a[shift + i] =
                    static_cast<uint32_t>((a[shift + i] + p - sub) % p);
            }
        }
        a.pop_back();
    }
    return a;
}

bool pf_is_zero(const std::vector<uint32_t>& a)
{
    return std::all_of(a.begin(), a.end(), [](uint32_t c) { return c == 0; });
}

// Trial division by every monic polynomial of degree 1..deg/2.
bool pf_irreducible(const std::vector<uint32_t>& m, uint32_t p)
{
    const size_t deg = m.size() - 1;
    for (size_t d = 1; 2 * d <= deg; ++d) {
        uint64_t count = 1;
        for (size_t i = 0; i < d; ++i) count *= p;
        for (uint64_t v = 0; v < count; ++v) {
            std::vector<uint32_t> div(d + 1, 0);
            uint64_t t = v;
            for (size_t i = 0; i < d; ++i) {
                div[i] = static_cast<uint32_t>(t % p);
                t /= p;
            }
            div[d] = 1;
            if (pf_is_zero(pf_rem(m, div, p))) return false;
        }
    }
    return true;
}

// The monic irreducible of the given degree whose coefficient vector is
// smallest when read low-to-high as a base-p integer.
std::vector<uint32_t> smallest_irreducible(uint32_t p, uint32_t e)
{
    if (e == 1) return {0, 1};  // the polynomial x
    uint64_t count = 1;
    for (uint32_t i = 0; i < e; ++i) count *= p;
    for (uint64_t v = 0; v < count; ++v) {
        std::vector<uint32_t> m(e + 1, 0);
        uint64_t t = v;
        for (uint32_t i = 0; i < e; ++i) {
            m[i] = static_cast<uint32_t>(t % p);
            t /= p;
        }
        m[e] = 1;
        if (pf_irreducible(m, p)) return m;
    }
    throw std::logic_error("no irreducible polynomial found");  // unreachable
}

}  // namespace

Field Field::make(uint32_t p, uint32_t e)
{
    if (!is_prime(p)) {
        throw std::invalid_argument("field characteristic must be prime, got " +
                                    std::to_string(p));
    }
    if (e < 1) throw std::invalid_argument("extension degree must be >= 1");
    uint64_t q = 1;
    for (uint32_t i = 0; i < e; ++i) {
        q *= p;
        if (q > (1ull << 16)) {
            throw std::invalid_argument("field order exceeds 2^16");
        }
    }
    auto rep = std::make_shared<Rep>();
    rep->p = p;
    rep->e = e;
    rep->q = q;
    rep->modulus = smallest_irreducible(p, e);
    return Field(std::move(rep));
}

std::string Field::label() const
{
    if (rep_->e == 1) return std::to_string(rep_->p);
    return std::to_string(rep_->p) + "^" + std::to_string(rep_->e);
}

FieldElem Field::zero() const
{
    return FieldElem{std::vector<uint32_t>(rep_->e, 0)};
}

FieldElem Field::one() const
{
    FieldElem r = zero();
    r.coeffs[0] = 1;
    return r;
}

FieldElem Field::from_int(uint64_t n) const
{
    FieldElem r = zero();
    r.coeffs[0] = static_cast<uint32_t>(n % rep_->p);
    return r;
}

FieldElem Field::from_coeffs(std::vector<uint32_t> coeffs) const
{
    if (coeffs.size() != rep_->e) {
        throw std::invalid_argument("element needs exactly " +
                                    std::to_string(rep_->e) + " coefficients");
    }
    for (uint32_t c : coeffs) {
        if (c >= rep_->p) {
            throw std::invalid_argument("coefficient out of range [0, p)");
        }
    }
    return FieldElem{std::move(coeffs)};
}

FieldElem Field::add(const FieldElem& a, const FieldElem& b) const
{
    FieldElem r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        r.coeffs[i] = (r.coeffs[i] + b.coeffs[i]) % rep_->p;
    }
    return r;
}

FieldElem Field::sub(const FieldElem& a, const FieldElem& b) const
{
    FieldElem r = a;
    for (size_t i = 0; i < r.coeffs.size(); ++i) {
        r.coeffs[i] = (r.coeffs[i] + rep_->p - b.coeffs[i]) % rep_->p;
    }
    return r;
}

FieldElem Field::neg(const FieldElem& a) const
{
    FieldElem r = a;
    for (auto& c : r.coeffs) c = (rep_->p - c) % rep_->p;
    return r;
}

FieldElem Field::mul(const FieldElem& a, const FieldElem& b) const
{
    const uint32_t p = rep_->p;
    const uint32_t e = rep_->e;
    if (e == 1) {
        FieldElem r = zero();
        r.coeffs[0] = static_cast<uint32_t>(
            static_cast<uint64_t>(a.coeffs[0]) * b.coeffs[0] % p);
        return r;
    }
    std::vector<uint64_t> acc(2 * e - 1, 0);
    for (uint32_t i = 0; i < e; ++i) {
        if (a.coeffs[i] == 0) continue;
        for (uint32_t j = 0; j < e; ++j) {
            acc[i + j] += static_cast<uint64_t>(a.coeffs[i]) * b.coeffs[j];
        }
    }
    // Reduce by the monic modulus, high degree first.
    const auto& m = rep_->modulus;
    for (size_t k = acc.size(); k-- > e;) {
        const uint64_t lead = acc[k] % p;
        if (lead == 0) continue;
        const size_t shift = k - e;
        for (uint32_t i = 0; i < e; ++i) {
            acc[shift + i] += static_cast<uint64_t>(p - m[i]) % p * lead;
        }
    }
    FieldElem r = zero();
    for (uint32_t i = 0; i < e; ++i) {
        r.coeffs[i] = static_cast<uint32_t>(acc[i] % p);
    }
    return r;
}

FieldElem Field::inv(const FieldElem& a) const
{
    if (is_zero(a)) throw std::domain_error("inversion of zero");
    return pow(a, rep_->q - 2);
}

FieldElem Field::pow(const FieldElem& a, uint64_t n) const
{
    FieldElem result = one();
    FieldElem base = a;
    while (n > 0) {
        if (n & 1) result = mul(result, base);
        n >>= 1;
        if (n > 0) base = mul(base, base);
    }
    return result;
}

std::optional<FieldElem> Field::sqrt(const FieldElem& a) const
{
    for (uint64_t i = 0; i < rep_->q; ++i) {
        FieldElem y = element_at(i);
        if (mul(y, y) == a) return y;
    }
    return std::nullopt;
}

bool Field::is_zero(const FieldElem& a) const
{
    return std::all_of(a.coeffs.begin(), a.coeffs.end(),
                       [](uint32_t c) { return c == 0; });
}

bool Field::is_one(const FieldElem& a) const { return a == one(); }

bool Field::in_prime_subfield(const FieldElem& a) const
{
    for (size_t i = 1; i < a.coeffs.size(); ++i) {
        if (a.coeffs[i] != 0) return false;
    }
    return true;
}

std::vector<FieldElem> Field::enumerate() const
{
    std::vector<FieldElem> out;
    out.reserve(rep_->q);
    for (uint64_t i = 0; i < rep_->q; ++i) out.push_back(element_at(i));
    return out;
}

uint64_t Field::index_of(const FieldElem& a) const
{
    uint64_t idx = 0;
    uint64_t base = 1;
    for (uint32_t i = 0; i < rep_->e; ++i) {
        idx += a.coeffs[i] * base;
        base *= rep_->p;
    }
    return idx;
}

FieldElem Field::element_at(uint64_t index) const
{
    if (index >= rep_->q) throw std::out_of_range("element index out of range");
    FieldElem r = zero();
    for (uint32_t i = 0; i < rep_->e; ++i) {
        r.coeffs[i] = static_cast<uint32_t>(index % rep_->p);
        index /= rep_->p;
    }
    return r;
}

Field field_from_order(uint64_t q)
{
    if (q < 2) throw std::invalid_argument("field order must be >= 2");
    uint64_t p = 2;
    while (q % p != 0) {
        ++p;
        if (p * p > q) {
            p = q;  // q itself is prime
            break;
        }
    }
    uint32_t e = 0;
    uint64_t t = q;
    while (t > 1) {
        if (t % p != 0) {
            throw std::invalid_argument(std::to_string(q) +
                                        " is not a prime power");
        }
        t /= p;
        ++e;
    }
    return Field::make(static_cast<uint32_t>(p), e);
}

Field field_from_text(const std::string& text)
{
    const auto caret = text.find('^');
    try {
        if (caret == std::string::npos) {
            return field_from_order(std::stoull(text));
        }
        const uint64_t p = std::stoull(text.substr(0, caret));
        const uint64_t e = std::stoull(text.substr(caret + 1));
        return Field::make(static_cast<uint32_t>(p), static_cast<uint32_t>(e));
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse field '" + text + "'");
    }
}

QuadExt::QuadExt(const Field& base)
    : base_(base),
      ext_(Field::make(base.characteristic(), 2 * base.degree())),
      root_(ext_.zero())
{
    if (base.characteristic() == 2) {
        throw std::invalid_argument(
            "quadratic extension requires odd characteristic");
    }
    // The embedding sends the base generator to a root of the base modulus;
    // the smallest root in enumeration order keeps the map deterministic.
    const auto& m = base_.modulus();
    bool found = false;
    for (uint64_t i = 0; i < ext_.order() && !found; ++i) {
        FieldElem cand = ext_.element_at(i);
        FieldElem acc = ext_.zero();
        for (size_t k = m.size(); k-- > 0;) {
            acc = ext_.add(ext_.mul(acc, cand), ext_.from_int(m[k]));
        }
        if (ext_.is_zero(acc)) {
            root_ = cand;
            found = true;
        }
    }
    if (!found) throw std::logic_error("base modulus has no root in extension");

    image_.reserve(base_.order());
    for (uint64_t i = 0; i < base_.order(); ++i) {
        const FieldElem a = base_.element_at(i);
        FieldElem acc = ext_.zero();
        for (size_t k = a.coeffs.size(); k-- > 0;) {
            acc = ext_.add(ext_.mul(acc, root_), ext_.from_int(a.coeffs[k]));
        }
        image_.push_back(acc);
        back_.emplace(ext_.index_of(acc), i);
    }
    if (back_.size() != base_.order()) {
        throw std::logic_error("embedding is not injective");
    }
}

FieldElem QuadExt::embed(const FieldElem& a) const
{
    return image_[base_.index_of(a)];
}

bool QuadExt::is_embedded(const FieldElem& x) const
{
    return back_.count(ext_.index_of(x)) != 0;
}

std::optional<FieldElem> QuadExt::try_project(const FieldElem& x) const
{
    const auto it = back_.find(ext_.index_of(x));
    if (it == back_.end()) return std::nullopt;
    return base_.element_at(it->second);
}

FieldElem QuadExt::project(const FieldElem& x) const
{
    auto r = try_project(x);
    if (!r) {
        throw std::logic_error(
            "value expected in the embedded base field lies outside it");
    }
    return *r;
}

QuadExt quad_ext(const Field& field) { return QuadExt(field); }

}  // namespace dickson
