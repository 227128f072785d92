#pragma once

#include <map>
#include <string>
#include <utility>

#include "spotlight/count.hpp"

namespace spotlight {

// Sparse bivariate polynomial in H and V with exact integer coefficients.
// Zero coefficients are never stored, so equality is plain map equality.
class BiPoly {
 public:
  using Key = std::pair<int, int>;  // (H exponent, V exponent)

  BiPoly() = default;

  BiPoly& add(int h, int v, const Count& coeff) {
    if (coeff == 0) return *this;
    Count& slot = terms_[{h, v}];
    slot += coeff;
    if (slot == 0) terms_.erase({h, v});
    return *this;
  }

  const std::map<Key, Count>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool operator==(const BiPoly&) const = default;

  // Coefficients of the single-variable polynomial obtained by substituting
  // the same variable for H and V, keyed by total degree.
  std::map<int, Count> substitute_same() const {
    std::map<int, Count> out;
    for (const auto& [key, coeff] : terms_) out[key.first + key.second] += coeff;
    return out;
  }

  // "0" or terms like "2*H^2*V" joined with " + ", sorted by exponents.
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [key, coeff] : terms_) {
      if (!out.empty()) out += " + ";
      std::string term;
      if (coeff != 1) term = coeff.str();
      auto factor = [&term](const char* var, int e) {
        if (e == 0) return;
        if (!term.empty()) term += "*";
        term += var;
        if (e > 1) term += "^" + std::to_string(e);
      };
      factor("H", key.first);
      factor("V", key.second);
      if (term.empty()) term = coeff.str();
      out += term;
    }
    return out;
  }

 private:
  std::map<Key, Count> terms_;
};

}  // namespace spotlight
