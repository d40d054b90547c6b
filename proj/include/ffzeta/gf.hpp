#pragma once

// Finite fields F_q, q = p^r, represented as F_p[x]/(m(x)) with m the
// lexicographically smallest monic irreducible polynomial of degree r.
// Ordering of candidate moduli: x^r + c_{r-1} x^{r-1} + ... + c_0 is ranked
// by the integer c_{r-1} p^{r-1} + ... + c_0, i.e. high coefficients first.

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "ffzeta/error.hpp"

namespace ffzeta {

inline constexpr std::uint64_t kDefaultFieldCap = std::uint64_t{1} << 20;
inline constexpr unsigned kMaxFieldDegree = 32;

struct FieldLimits {
  /// Largest admissible field size. Fields are small enough to enumerate.
  std::uint64_t max_size = kDefaultFieldCap;
};

namespace detail {
struct FieldCore;
}

class FiniteField;

class FieldElement {
 public:
  FieldElement() = default;

  /// Coefficients over F_p, lowest degree first, length r.
  std::span<const std::uint32_t> coeffs() const;
  bool is_zero() const;
  /// Packed index sum c_i p^i, a bijection onto [0, q).
  std::uint64_t index() const;
  FiniteField field() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b);

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  FieldElement pow(std::uint64_t k) const;
  FieldElement inv() const;
  /// x -> x^p.
  FieldElement frobenius() const;

 private:
  friend class FiniteField;
  std::shared_ptr<const detail::FieldCore> core_;
  std::array<std::uint32_t, kMaxFieldDegree> c_{};
};

class FiniteField {
 public:
  /// Errors: NonPrime, DegreeZero, CapExceeded.
  static FiniteField make(std::uint64_t p, unsigned r, FieldLimits limits = {});

  std::uint64_t characteristic() const;
  unsigned degree() const;
  std::uint64_t size() const;
  const FieldLimits& limits() const;
  /// Monic modulus, lowest degree first (length r + 1). For r = 1 this is x.
  const std::vector<std::uint32_t>& modulus() const;

  FieldElement zero() const;
  FieldElement one() const;
  /// Image of an integer in the prime subfield.
  FieldElement from_int(std::int64_t v) const;
  /// Element from F_p coefficients (lowest first, at most r of them), reduced mod p.
  FieldElement element(std::span<const std::int64_t> coeffs) const;
  FieldElement from_index(std::uint64_t index) const;
  /// The class of x (a root of the modulus).
  FieldElement generator() const;

  /// All q elements in index order.
  std::vector<FieldElement> elements() const;

  /// All y with y^2 = a, from a per-field table of squares built on first use.
  std::vector<FieldElement> square_roots(const FieldElement& a) const;
  bool is_square(const FieldElement& a) const;

  /// A generator of the multiplicative group (smallest index).
  FieldElement primitive_element() const;

  friend bool operator==(const FiniteField& a, const FiniteField& b);

 private:
  friend class FieldElement;
  explicit FiniteField(std::shared_ptr<const detail::FieldCore> core) : core_(std::move(core)) {}
  std::shared_ptr<const detail::FieldCore> core_;
};

FiniteField make_field(std::uint64_t p, unsigned r, FieldLimits limits = {});

/// Injective homomorphism F_q -> F_{q^n} given by the image of the generator.
class FieldEmbedding {
 public:
  FieldEmbedding(FiniteField source, FiniteField target, FieldElement generator_image);

  const FiniteField& source() const { return source_; }
  const FiniteField& target() const { return target_; }
  const FieldElement& generator_image() const { return image_; }

  FieldElement operator()(const FieldElement& a) const;

 private:
  FiniteField source_;
  FiniteField target_;
  FieldElement image_;
};

struct FieldExtension {
  FiniteField field;
  FieldEmbedding embedding;
};

/// F_{q^n} as a degree r*n extension of F_p with an embedding of k.
FieldExtension extend(const FiniteField& k, unsigned n);

bool is_prime(std::uint64_t n);

}  // namespace ffzeta
