#include "fischer/spec.hpp"

#include "fischer/errors.hpp"

namespace fischer {

const char* family_name(Family f)
{
  switch (f) {
  case Family::Sym: return "sym";
  case Family::Sp: return "sp";
  case Family::U: return "u";
  case Family::OF2: return "o2";
  case Family::POF3: return "po3";
  case Family::Fischer: return "fischer";
  }
  return "?";
}

void validate(const GroupSpec& g)
{
  auto require = [&](bool ok, const char* what) {
    if (!ok)
      throw ConfigError(std::string(family_name(g.family)) + ": " + what + " (n = " + std::to_string(g.n) + ")");
  };
  switch (g.family) {
  case Family::Sym: require(g.n >= 1, "needs n >= 1"); break;
  case Family::Sp: require(g.n >= 2 && g.n % 2 == 0, "needs even n >= 2"); break;
  case Family::U: require(g.n >= 1, "needs n >= 1"); break;
  case Family::OF2: require(g.n >= 2, "needs n >= 2"); break;
  case Family::POF3: require(g.n >= 1, "needs n >= 1"); break;
  case Family::Fischer: require(g.n == 22 || g.n == 23 || g.n == 24, "needs n in {22, 23, 24}"); break;
  }
}

std::string to_string(const GroupSpec& g)
{
  const std::string n = std::to_string(g.n);
  switch (g.family) {
  case Family::Sym: return "S(" + n + ")";
  case Family::Sp: return "Sp(" + n + ")";
  case Family::U: return "U(" + n + ")";
  case Family::OF2: return "O2(" + n + "," + sign_char(g.eps) + ")";
  case Family::POF3: return "PO3(" + n + "," + sign_char(g.mu) + "," + sign_char(g.pi) + ")";
  case Family::Fischer: return "M(" + n + ")";
  }
  return "?";
}

bool is_classical(const GroupSpec& g) { return g.family != Family::Sym && g.family != Family::Fischer; }

int space_dimension(const GroupSpec& g) { return is_classical(g) ? g.n : 0; }

GroupSpec normalize_spec(const GroupSpec& g)
{
  validate(g);
  GroupSpec out = g;
  if (g.family == Family::OF2 && g.n % 2 == 1)
    return GroupSpec::sp(g.n - 1);
  if (g.family == Family::POF3 && g.pi == Sign::Minus) {
    out.pi = Sign::Plus;
    if (g.n % 2 == 1)
      out.mu = -g.mu;
  }
  return out;
}

const char* source_tag(FormulaSource s) { return s == FormulaSource::Propositions ? "formula-props" : "formula-conclusion"; }

namespace {

int props(const GroupSpec& g)
{
  const int n = g.n;
  switch (g.family) {
  case Family::Sym: return n;
  case Family::Sp: return n == 2 ? 3 : n + 2;
  case Family::U:
    if (n <= 3)
      return n == 1 ? 1 : 3;
    return n % 2 == 1 ? n + 1 : n + 2;
  case Family::POF3:
    if (g.mu == Sign::Plus) {
      if (n == 1)
        return 1;
      if (n == 2)
        return 2;
      return n % 3 == 1 ? n : n + 1;
    }
    if (n <= 3)
      return 2;
    if (n % 3 == 1)
      return n + 2;
    return n % 3 == 2 ? n + 1 : n;
  case Family::OF2:
    if (g.eps == Sign::Plus) {
      if (n == 2)
        return 2;
      if (n == 4)
        return 3;
      if (n % 8 == 2)
        return n;
      if (n % 8 == 6)
        return n + 2;
      return n + 1;
    }
    if (n == 2)
      return 3;
    if (n % 8 == 6)
      return n;
    if (n % 8 == 2)
      return n + 2;
    return n + 1;
  case Family::Fischer: return g.n == 22 ? 10 : 12;
  }
  return 0;
}

int conclusion(const GroupSpec& g)
{
  const int n = g.n;
  switch (g.family) {
  case Family::Sym: return n;
  case Family::Sp: return n == 2 ? 3 : n + 2;
  case Family::U:
    if (n <= 3)
      return n;
    return n % 2 == 1 ? n + 1 : n + 2;
  case Family::POF3:
    if (g.mu == Sign::Plus)
      return n % 3 == 1 ? n : n + 1;
    if (n % 3 == 1)
      return n + 2;
    return n % 3 == 0 ? n + 1 : n;
  case Family::OF2:
    // The second bullet names O^+ inside the O^- item; read as O^-.
    if (g.eps == Sign::Plus) {
      if (n == 4)
        return 3;
      if (n % 4 == 0)
        return n + 1;
      return n % 8 == 2 ? n : n + 2;
    }
    if (n == 2)
      return 3;
    if (n % 4 == 0)
      return n + 1;
    return n % 8 == 6 ? n : n + 2;
  case Family::Fischer: return g.n == 22 ? 10 : 12;
  }
  return 0;
}

} // namespace

int phi_formula(const GroupSpec& g, FormulaSource source)
{
  validate(g);
  if (normalize_spec(g) != g)
    throw PreconditionError("phi_formula expects a normalized spec, got " + to_string(g));
  return source == FormulaSource::Propositions ? props(g) : conclusion(g);
}

} // namespace fischer
