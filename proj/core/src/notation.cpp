#include "projd/notation.hpp"

#include <algorithm>
#include <cctype>

#include "projd/errors.hpp"

namespace projd::notation {

namespace {

std::string trim(const std::string &s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
    ++b;
  }
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
    --e;
  }
  return s.substr(b, e - b);
}

std::string strip_parens(const std::string &s) {
  std::string t = trim(s);
  if (t.size() >= 2 && t.front() == '(' && t.back() == ')') {
    return trim(t.substr(1, t.size() - 2));
  }
  return t;
}

std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(trim(cur));
  return out;
}

fgab::Integer parse_integer(const std::string &tok, const std::string &context) {
  std::string t = trim(tok);
  const std::size_t digits_from = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (t.size() == digits_from ||
      !std::all_of(t.begin() + static_cast<std::ptrdiff_t>(digits_from), t.end(),
                   [](unsigned char c) { return std::isdigit(c); })) {
    throw ParseError("expected an integer, got '" + tok + "' in " + context);
  }
  if (t[0] == '+') {
    t.erase(0, 1);
  }
  return fgab::Integer(t, 10);
}

} // namespace

std::string format_degree(const fgab::FgAbGroup &group, const fgab::GroupElement &d) {
  std::string free;
  for (std::size_t i = 0; i < d.free.size(); ++i) {
    free += (i ? "," : "") + d.free[i].get_str();
  }
  std::string tors;
  for (std::size_t j = 0; j < d.torsion.size(); ++j) {
    tors += (j ? ", " : "") + d.torsion[j].get_str() + " mod " + group.torsion_orders()[j].get_str();
  }
  if (tors.empty()) {
    return "(" + free + ")";
  }
  if (free.empty()) {
    return "(" + tors + ")";
  }
  return "(" + free + " | " + tors + ")";
}

fgab::GroupElement parse_degree(const fgab::FgAbGroup &group, const std::string &text) {
  const std::string context = "degree '" + text + "'";
  const std::string body = strip_parens(text);
  const std::size_t r = group.rank();
  const std::size_t t = group.torsion_rank();
  fgab::IntVector free;
  fgab::IntVector tors;

  const auto bar = body.find('|');
  if (bar == std::string::npos) {
    if (body == "0") {
      return group.zero();
    }
    std::vector<std::string> items = body.empty() ? std::vector<std::string>{} : split(body, ',');
    if (items.size() != r + t) {
      throw ParseError(context + " has " + std::to_string(items.size()) + " coordinates, expected " +
                       std::to_string(r + t));
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      (i < r ? free : tors).push_back(parse_integer(items[i], context));
    }
  } else {
    const std::string left = trim(body.substr(0, bar));
    const std::string right = trim(body.substr(bar + 1));
    if (!left.empty()) {
      for (const auto &it : split(left, ',')) {
        free.push_back(parse_integer(it, context));
      }
    }
    if (!right.empty()) {
      const auto items = split(right, ',');
      for (std::size_t j = 0; j < items.size(); ++j) {
        const auto mod = items[j].find("mod");
        if (mod == std::string::npos) {
          tors.push_back(parse_integer(items[j], context));
          continue;
        }
        tors.push_back(parse_integer(items[j].substr(0, mod), context));
        const fgab::Integer m = parse_integer(items[j].substr(mod + 3), context);
        if (j >= t || m != group.torsion_orders()[j]) {
          throw ParseError(context + ": modulus " + m.get_str() +
                           " does not match the grading group");
        }
      }
    }
    if (free.size() != r || tors.size() != t) {
      throw ParseError(context + " does not match a group with " + std::to_string(r) +
                       " free and " + std::to_string(t) + " torsion coordinates");
    }
  }
  return group.element(std::move(free), std::move(tors));
}

std::string format_monomial(const std::vector<std::string> &names,
                            const diophantine::ExponentVector &a) {
  const bool compact = std::all_of(names.begin(), names.end(),
                                   [](const std::string &s) { return s.size() == 1; });
  const std::string sep = compact ? "" : "*";
  std::string num;
  std::string den;
  std::size_t den_vars = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) {
      continue;
    }
    const auto e = a[i] > 0 ? a[i] : -a[i];
    std::string factor = names.at(i) + (e > 1 ? "^" + std::to_string(e) : "");
    std::string &side = a[i] > 0 ? num : den;
    side += (side.empty() ? "" : sep) + factor;
    den_vars += a[i] < 0 ? 1 : 0;
  }
  if (num.empty()) {
    num = "1";
  }
  if (den.empty()) {
    return num;
  }
  return num + "/" + (den_vars > 1 ? "(" + den + ")" : den);
}

std::string format_monomial(const ring::RingSpec &spec, const diophantine::ExponentVector &a) {
  return format_monomial(spec.names(), a);
}

ring::Monomial parse_monomial(const ring::RingSpec &spec, const std::string &text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      s += c;
    }
  }
  ring::Monomial m(spec.size(), 0);
  if (s == "1") {
    return m;
  }
  if (s.empty()) {
    throw ParseError("empty monomial");
  }
  const auto names = spec.names();
  std::size_t p = 0;
  bool expect_factor = true;
  while (p < s.size()) {
    if (s[p] == '*') {
      if (expect_factor) {
        throw ParseError("misplaced '*' in monomial '" + text + "'");
      }
      expect_factor = true;
      ++p;
      continue;
    }
    std::size_t best = names.size();
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (s.compare(p, names[i].size(), names[i]) == 0 &&
          (best == names.size() || names[i].size() > names[best].size())) {
        best = i;
      }
    }
    if (best == names.size()) {
      throw ParseError("unknown variable at '" + s.substr(p) + "' in monomial '" + text + "'");
    }
    p += names[best].size();
    diophantine::Exponent e = 1;
    if (p < s.size() && s[p] == '^') {
      std::size_t q = ++p;
      while (q < s.size() && std::isdigit(static_cast<unsigned char>(s[q]))) {
        ++q;
      }
      if (q == p || q - p > 9) {
        throw ParseError("bad exponent after '" + names[best] + "' in monomial '" + text + "'");
      }
      e = std::stoll(s.substr(p, q - p));
      p = q;
    }
    m[best] = diophantine::checked_add(m[best], e);
    expect_factor = false;
  }
  if (expect_factor) {
    throw ParseError("trailing '*' in monomial '" + text + "'");
  }
  return m;
}

std::string format_prime(const ring::RingSpec &spec, const std::vector<std::size_t> &vars) {
  if (vars.empty()) {
    return "(0)";
  }
  std::string out = "(";
  for (std::size_t i = 0; i < vars.size(); ++i) {
    out += (i ? "," : "") + spec.variables().at(vars[i]).name;
  }
  return out + ")";
}

std::vector<std::size_t> parse_prime(const ring::RingSpec &spec, const std::string &text) {
  const std::string body = strip_parens(text);
  if (body.empty() || body == "0") {
    return {};
  }
  std::vector<std::size_t> vars;
  for (const auto &name : split(body, ',')) {
    const auto idx = spec.variable_index(name);
    if (!idx) {
      throw ParseError("unknown variable '" + name + "' in prime '" + text + "'");
    }
    vars.push_back(*idx);
  }
  std::sort(vars.begin(), vars.end());
  vars.erase(std::unique(vars.begin(), vars.end()), vars.end());
  return vars;
}

} // namespace projd::notation
