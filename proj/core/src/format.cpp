#include <cctype>
#include <ostream>
#include <sstream>
#include <string>

#include "dnlift/terms.hpp"

namespace dnlift {

namespace {

bool is_plain_atom(const std::string& name) {
  if (name.empty()) return false;
  if (name == kNil) return true;
  if (std::islower(static_cast<unsigned char>(name[0]))) {
    for (char ch : name) {
      if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_') return false;
    }
    return true;
  }
  for (char ch : name) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

void write_symbol(std::ostream& os, const std::string& name) {
  if (is_plain_atom(name)) {
    os << name;
    return;
  }
  os << '\'';
  for (char ch : name) {
    if (ch == '\'') os << '\'';
    os << ch;
  }
  os << '\'';
}

bool is_cons(const Term& t) {
  return t.is_compound() && t.arity() == 2 && t.functor() == kListFunctor;
}

void write_term(std::ostream& os, const Term& t) {
  if (t.is_var()) {
    os << t.var();
    return;
  }
  if (is_cons(t)) {
    os << '[';
    write_term(os, t.args()[0]);
    Term tail = t.args()[1];
    while (is_cons(tail)) {
      os << ',';
      write_term(os, tail.args()[0]);
      tail = tail.args()[1];
    }
    if (!(tail.is_constant() && tail.functor() == kNil)) {
      os << '|';
      write_term(os, tail);
    }
    os << ']';
    return;
  }
  write_symbol(os, t.functor());
  if (t.arity() == 0) return;
  os << '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i) os << ',';
    write_term(os, t.args()[i]);
  }
  os << ')';
}

template <typename T>
std::string stringify(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

}  // namespace

std::ostream& operator<<(std::ostream& os, const Var& v) {
  os << v.name;
  if (v.index != 0) os << '_' << v.index;
  return os;
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  write_term(os, t);
  return os;
}

std::ostream& operator<<(std::ostream& os, const Atom& a) {
  write_symbol(os, a.predicate);
  if (a.args.empty()) return os;
  os << '(';
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (i) os << ',';
    write_term(os, a.args[i]);
  }
  return os << ')';
}

std::ostream& operator<<(std::ostream& os, const Query& q) {
  if (q.empty()) return os << "true";
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (i) os << ", ";
    os << q[i];
  }
  return os;
}

std::ostream& operator<<(std::ostream& os, const Clause& c) {
  os << c.head;
  if (!c.body.empty()) os << " :- " << c.body;
  return os;
}

std::ostream& operator<<(std::ostream& os, const Substitution& s) {
  os << '{';
  bool first = true;
  for (const auto& [v, t] : s) {
    if (!first) os << ", ";
    first = false;
    os << v << '/' << t;
  }
  return os << '}';
}

std::string to_string(const Var& v) { return stringify(v); }
std::string to_string(const Term& t) { return stringify(t); }
std::string to_string(const Atom& a) { return stringify(a); }
std::string to_string(const Query& q) { return stringify(q); }
std::string to_string(const Clause& c) { return stringify(c); }
std::string to_string(const Substitution& s) { return stringify(s); }

std::string to_string(const Program& p) {
  std::ostringstream os;
  for (const Clause& c : p.clauses()) os << c << ".\n";
  return os.str();
}

}  // namespace dnlift
