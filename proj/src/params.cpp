#include "mvop/params.hpp"

#include <stdexcept>

namespace mvop {

std::string_view to_string(Family family) {
  switch (family) {
    case Family::hahn:
      return "hahn";
    case Family::krawtchouk:
      return "krawtchouk";
    case Family::meixner:
      return "meixner";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "hahn") return Family::hahn;
  if (name == "krawtchouk") return Family::krawtchouk;
  if (name == "meixner") return Family::meixner;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

FamilyParams FamilyParams::hahn(std::vector<Rational> a, Rational b, int N) {
  FamilyParams p;
  p.family = Family::hahn;
  p.a = std::move(a);
  p.b = std::move(b);
  p.N = N;
  p.validate();
  return p;
}

FamilyParams FamilyParams::krawtchouk(std::vector<Rational> a, int N) {
  FamilyParams p;
  p.family = Family::krawtchouk;
  p.a = std::move(a);
  p.N = N;
  p.validate();
  return p;
}

FamilyParams FamilyParams::meixner(std::vector<Rational> a, Rational beta) {
  FamilyParams p;
  p.family = Family::meixner;
  p.a = std::move(a);
  p.beta = std::move(beta);
  p.validate();
  return p;
}

void FamilyParams::validate() const {
  if (a.size() < 2) {
    throw std::invalid_argument("need n >= 2 parameters a_i");
  }
  for (const auto& ai : a) {
    if (ai.sign() <= 0) {
      throw std::invalid_argument("all a_i must be positive");
    }
  }
  switch (family) {
    case Family::hahn:
      if (b.sign() <= 0) {
        throw std::invalid_argument("hahn: b must be positive");
      }
      [[fallthrough]];
    case Family::krawtchouk:
      if (N < 1) {
        throw std::invalid_argument("N must be a positive integer");
      }
      break;
    case Family::meixner:
      if (a_total() >= Rational(1)) {
        throw std::invalid_argument("meixner: |a| must be < 1");
      }
      if (beta.sign() <= 0) {
        throw std::invalid_argument("meixner: beta must be positive");
      }
      break;
  }
}

Rational FamilyParams::a_total() const {
  Rational sum;
  for (const auto& ai : a) {
    sum += ai;
  }
  return sum;
}

Rational FamilyParams::a_tail(int i) const {
  if (i < 1 || i > dim() - 1) {
    throw std::invalid_argument("a_tail: index outside [1, n-1]");
  }
  return a_from(i + 1);
}

Rational FamilyParams::a_from(int i) const {
  Rational sum;
  for (int j = i; j <= dim(); ++j) {
    sum += a_at(j);
  }
  return sum;
}

Rational FamilyParams::a_subset(std::span<const int> subset) const {
  Rational sum;
  for (int j : subset) {
    if (j < 1 || j > dim()) {
      throw std::invalid_argument("a_subset: index out of range");
    }
    sum += a_at(j);
  }
  return sum;
}

std::string FamilyParams::describe() const {
  std::string out(to_string(family));
  out += " n=" + std::to_string(dim());
  out += " a=";
  for (std::size_t i = 0; i < a.size(); ++i) {
    out += (i ? "," : "") + a[i].str();
  }
  if (family == Family::hahn) {
    out += " b=" + b.str();
  }
  if (bounded()) {
    out += " N=" + std::to_string(N);
  } else {
    out += " beta=" + beta.str();
  }
  return out;
}

Rational tail_param(const FamilyParams& params, int i) { return params.a_tail(i); }

LatticePtr domain_lattice(const FamilyParams& params, std::optional<int> x_max) {
  if (params.bounded()) {
    return make_lattice(params.dim(), params.N);
  }
  if (!x_max || *x_max < 1) {
    throw std::invalid_argument("meixner: a positive truncation bound x_max is required");
  }
  return make_lattice(params.dim(), *x_max);
}

}  // namespace mvop
