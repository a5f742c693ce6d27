#ifndef FISCHER_SPEC_HPP
#define FISCHER_SPEC_HPP

// Symbolic names for the groups of Fischer's list and the closed-form
// values of phi from the two statements of the results.

#include "fischer/formspace.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fischer {

enum class Family { Sym, Sp, U, OF2, POF3, Fischer };

const char* family_name(Family f);

/// Sym(n), Sp(n), U(n), OF2(n, eps), POF3(n, mu, pi), Fischer(22|23|24).
/// Signs not used by a family are kept at Plus.
struct GroupSpec {
  Family family = Family::Sym;
  int n = 1;
  Sign eps = Sign::Plus;
  Sign mu = Sign::Plus;
  Sign pi = Sign::Plus;

  static GroupSpec sym(int n) { return {Family::Sym, n}; }
  static GroupSpec sp(int n) { return {Family::Sp, n}; }
  static GroupSpec u(int n) { return {Family::U, n}; }
  static GroupSpec of2(int n, Sign eps) { return {Family::OF2, n, eps}; }
  static GroupSpec pof3(int n, Sign mu, Sign pi = Sign::Plus) { return {Family::POF3, n, Sign::Plus, mu, pi}; }
  static GroupSpec fischer(int n) { return {Family::Fischer, n}; }

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Throws ConfigError when parameters are out of range.
void validate(const GroupSpec& g);

/// "Sp(8)", "U(2)", "O2(8,-)", "PO3(5,-,+)", "S(7)", "M(22)".
std::string to_string(const GroupSpec& g);

bool is_classical(const GroupSpec& g);

/// Dimension of the form space (0 for Sym and Fischer).
int space_dimension(const GroupSpec& g);

/// Odd O2 to Sp(n-1); PO3 with pi = - to pi = + (flipping mu when n is odd).
GroupSpec normalize_spec(const GroupSpec& g);

enum class FormulaSource { Propositions, Conclusion };

const char* source_tag(FormulaSource s);

/// phi from the chosen statement, read literally. Expects a normalized spec.
int phi_formula(const GroupSpec& g, FormulaSource source);

} // namespace fischer

#endif
