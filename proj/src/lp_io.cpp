#include "multipoly/lp_io.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

#include "multipoly/errors.hpp"

namespace multipoly {

namespace {

BigInt row_scale(const std::vector<Rational>& values, int max_scale_digits) {
  BigInt lcm(1);
  for (const Rational& q : values)
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
  if (static_cast<int>(lcm.get_str().size()) > max_scale_digits)
    throw RequiresScaling("integer scaling needs " + std::to_string(lcm.get_str().size()) +
                          " digits, budget is " + std::to_string(max_scale_digits));
  return lcm;
}

void write_term(std::ostream& out, bool& first, const BigInt& coeff,
                const std::string& name) {
  if (coeff == 0) return;
  if (coeff < 0)
    out << (first ? "- " : " - ");
  else if (!first)
    out << " + ";
  BigInt mag = abs(coeff);
  if (mag != 1) out << mag.get_str() << ' ';
  out << name;
  first = false;
}

}  // namespace

std::string emit_lp(const InequalitySystem& system, const Objective& objective,
                    int max_scale_digits) {
  std::ostringstream out;

  std::vector<Rational> obj_values;
  std::vector<std::pair<std::string, Rational>> obj_terms;
  for (const auto& [v, c] : objective) {
    if (!system.has_variable(v))
      throw std::invalid_argument("objective variable " + v.name() +
                                  " is not part of the system");
    obj_terms.emplace_back(v.name(), c);
    obj_values.push_back(c);
  }
  BigInt obj_scale = row_scale(obj_values, max_scale_digits);
  if (obj_scale != 1)
    out << "\\ objective scaled by " << obj_scale.get_str() << "\n";

  std::ostringstream obj_body;
  bool obj_first = true;
  for (const auto& [name, c] : obj_terms) {
    BigInt scaled = c.get_num() * (obj_scale / c.get_den());
    write_term(obj_body, obj_first, scaled, name);
  }
  out << "Maximize\n obj: " << (obj_first ? std::string("0") : obj_body.str())
      << "\nSubject To\n";

  int index = 0;
  for (const LinearInequality& row : system.rows()) {
    std::vector<Rational> values;
    for (const auto& [v, c] : row.coeffs) values.push_back(c);
    values.push_back(row.rhs);
    BigInt scale = row_scale(values, max_scale_digits);
    out << " c" << ++index << ':';
    bool row_first = true;
    std::ostringstream body;
    for (const auto& [v, c] : row.coeffs) {
      BigInt scaled = c.get_num() * (scale / c.get_den());
      write_term(body, row_first, scaled, v.name());
    }
    if (row_first) body << '0';
    BigInt rhs_scaled = row.rhs.get_num() * (scale / row.rhs.get_den());
    out << ' ' << body.str() << " <= " << rhs_scaled.get_str() << '\n';
  }

  out << "Bounds\n";
  for (const VariableId& v : system.variables()) out << ' ' << v.name() << " >= 0\n";
  out << "End\n";
  return out.str();
}

namespace {

struct Token {
  std::string text;
  int line, column;
};

std::vector<Token> tokenize_lp(std::string_view text) {
  std::vector<Token> tokens;
  int line = 1, col = 1;
  std::string current;
  int tok_line = 1, tok_col = 1;
  auto flush = [&] {
    if (!current.empty()) {
      tokens.push_back({current, tok_line, tok_col});
      current.clear();
    }
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    char c = text[i];
    if (c == '\\') {  // comment to end of line
      flush();
      while (i < text.size() && text[i] != '\n') ++i;
      ++line;
      col = 1;
      continue;
    }
    if (c == '\n') {
      flush();
      ++line;
      col = 1;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      flush();
      ++col;
      continue;
    }
    if (c == '+' || c == '-' || c == ':') {
      flush();
      tokens.push_back({std::string(1, c), line, col});
      ++col;
      continue;
    }
    if (c == '<' || c == '>' || c == '=') {
      flush();
      std::string op(1, c);
      if ((c == '<' || c == '>') && i + 1 < text.size() && text[i + 1] == '=') {
        op += '=';
        ++i;
        ++col;
      }
      tokens.push_back({op, line, col});
      ++col;
      continue;
    }
    if (current.empty()) {
      tok_line = line;
      tok_col = col;
    }
    current += c;
    ++col;
  }
  flush();
  return tokens;
}

bool is_number(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '.') return false;
  return true;
}

Rational parse_lp_number(const Token& tok) {
  const std::string& s = tok.text;
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    // terminating decimal
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    std::size_t frac_digits = s.size() - dot - 1;
    BigInt num(digits.empty() ? "0" : digits);
    BigInt den(1);
    for (std::size_t i = 0; i < frac_digits; ++i) den *= 10;
    Rational q(num, den);
    q.canonicalize();
    return q;
  }
  try {
    return parse_rational(s);
  } catch (const std::invalid_argument&) {
    throw ParseError(tok.line, tok.column, "expected a number, got '" + s + "'");
  }
}

}  // namespace

ParsedLp parse_lp(std::string_view text) {
  std::vector<Token> tokens = tokenize_lp(text);
  std::size_t pos = 0;
  auto peek = [&]() -> const Token* { return pos < tokens.size() ? &tokens[pos] : nullptr; };
  auto expect_keyword = [&](const std::string& kw) {
    if (!peek() || peek()->text != kw)
      throw ParseError(peek() ? peek()->line : 0, peek() ? peek()->column : 0,
                       "expected '" + kw + "'");
    ++pos;
  };

  auto lower = [](std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    return s;
  };

  // linear expression until a comparison operator or section keyword
  auto parse_expr = [&](std::map<VariableId, Rational>& coeffs) {
    int sign = 1;
    bool have_pending_number = false;
    Rational pending(1);
    while (peek()) {
      const std::string t = peek()->text;
      if (t == "<=" || t == ">=" || t == "=" ) break;
      std::string low = lower(t);
      if (low == "subject" || low == "bounds" || low == "end" || low == "st") break;
      if (t == "+") {
        ++pos;
        continue;
      }
      if (t == "-") {
        sign = -sign;
        ++pos;
        continue;
      }
      if (is_number(t)) {
        pending = parse_lp_number(*peek());
        have_pending_number = true;
        ++pos;
        continue;
      }
      // a name; an explicit "0" term is also absorbed by is_number above
      auto var = VariableId::parse_name(t);
      if (!var)
        throw ParseError(peek()->line, peek()->column, "unknown variable '" + t + "'");
      Rational c = have_pending_number ? pending : Rational(1);
      coeffs[*var] += Rational(sign) * c;
      sign = 1;
      have_pending_number = false;
      pending = 1;
      ++pos;
    }
    // a dangling constant ("0" objective) is allowed and ignored
    have_pending_number = false;
  };

  ParsedLp result;
  expect_keyword("Maximize");
  // optional label
  if (peek() && peek()->text != "Subject") {
    if (pos + 1 < tokens.size() && tokens[pos + 1].text == ":") pos += 2;
  }
  std::map<VariableId, Rational> obj;
  parse_expr(obj);
  for (auto& [v, c] : obj)
    if (c != 0) result.objective.emplace(v, c);

  expect_keyword("Subject");
  expect_keyword("To");

  std::vector<LinearInequality> rows;
  while (peek() && lower(peek()->text) != "bounds" && lower(peek()->text) != "end") {
    if (pos + 1 < tokens.size() && tokens[pos + 1].text == ":") pos += 2;  // label
    std::map<VariableId, Rational> coeffs;
    parse_expr(coeffs);
    if (!peek()) throw ParseError(0, 0, "constraint without a comparison");
    std::string op = peek()->text;
    Token op_tok = *peek();
    ++pos;
    if (!peek()) throw ParseError(op_tok.line, op_tok.column, "missing right-hand side");
    Rational rhs = parse_lp_number(*peek());
    ++pos;
    for (auto it = coeffs.begin(); it != coeffs.end();)
      it = it->second == 0 ? coeffs.erase(it) : std::next(it);
    if (op == "<=") {
      rows.emplace_back(std::move(coeffs), rhs, "lp");
    } else if (op == ">=") {
      std::map<VariableId, Rational> negated;
      for (const auto& [v, c] : coeffs) negated.emplace(v, -c);
      rows.emplace_back(std::move(negated), -rhs, "lp");
    } else {
      throw ParseError(op_tok.line, op_tok.column, "unsupported comparison '" + op + "'");
    }
  }
  if (peek() && lower(peek()->text) == "bounds") {
    ++pos;
    while (peek() && lower(peek()->text) != "end") ++pos;  // defaults only
  }
  if (peek() && lower(peek()->text) == "end") ++pos;

  for (const auto& row : rows)
    for (const auto& [v, c] : row.coeffs) result.system.add_variable(v);
  for (const auto& [v, c] : result.objective) result.system.add_variable(v);
  for (auto& row : rows) result.system.add_row(std::move(row));
  return result;
}

Objective parse_objective(std::string_view text) {
  Objective objective;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    std::istringstream fields(line);
    std::string keyword;
    if (!(fields >> keyword)) continue;
    std::vector<std::string> tokens;
    std::string tok;
    while (fields >> tok) tokens.push_back(tok);
    if (tokens.empty()) throw ParseError(lineno, 1, "missing coefficient");
    Rational coeff;
    try {
      coeff = parse_rational(tokens.back());
    } catch (const std::invalid_argument&) {
      throw ParseError(lineno, 1, "bad coefficient '" + tokens.back() + "'");
    }
    tokens.pop_back();
    std::vector<NodeId> ids;
    for (const std::string& t : tokens) {
      try {
        ids.push_back(std::stoll(t));
      } catch (...) {
        throw ParseError(lineno, 1, "bad node id '" + t + "'");
      }
    }
    if (keyword == "node") {
      if (ids.size() != 1) throw ParseError(lineno, 1, "node lines take exactly one id");
      objective[VariableId::node(ids[0])] += coeff;
    } else if (keyword == "edge") {
      if (ids.size() < 2) throw ParseError(lineno, 1, "edge lines take at least two ids");
      objective[VariableId::edge(Edge(ids))] += coeff;
    } else {
      throw ParseError(lineno, 1, "unknown keyword '" + keyword + "'");
    }
  }
  for (auto it = objective.begin(); it != objective.end();)
    it = it->second == 0 ? objective.erase(it) : std::next(it);
  return objective;
}

std::string serialize_objective(const Objective& objective) {
  std::ostringstream out;
  for (const auto& [v, c] : objective) {
    if (v.is_node()) {
      out << "node " << v.node_id();
    } else {
      out << "edge";
      for (NodeId u : v.edge_ref().nodes()) out << ' ' << u;
    }
    out << ' ' << rational_str(c) << '\n';
  }
  return out.str();
}

std::string system_to_json(const InequalitySystem& system) {
  nlohmann::json doc;
  doc["variables"] = nlohmann::json::array();
  for (const VariableId& v : system.variables()) doc["variables"].push_back(v.name());
  doc["rows"] = nlohmann::json::array();
  for (const LinearInequality& row : system.rows()) {
    nlohmann::json r;
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [v, c] : row.coeffs) coeffs[v.name()] = rational_str(c);
    r["coeffs"] = std::move(coeffs);
    r["rhs"] = rational_str(row.rhs);
    std::string tag;
    for (std::size_t i = 0; i < row.tags.size(); ++i) tag += (i ? "+" : "") + row.tags[i];
    r["tag"] = tag;
    doc["rows"].push_back(std::move(r));
  }
  return doc.dump(2);
}

InequalitySystem system_from_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    throw ParseError(1, static_cast<int>(err.byte), err.what());
  }
  InequalitySystem system;
  for (const auto& name : doc.at("variables")) {
    auto v = VariableId::parse_name(name.get<std::string>());
    if (!v) throw ParseError(1, 1, "bad variable name '" + name.get<std::string>() + "'");
    system.add_variable(*v);
  }
  for (const auto& r : doc.at("rows")) {
    std::map<VariableId, Rational> coeffs;
    for (const auto& [name, value] : r.at("coeffs").items()) {
      auto v = VariableId::parse_name(name);
      if (!v) throw ParseError(1, 1, "bad variable name '" + name + "'");
      coeffs.emplace(*v, parse_rational(value.get<std::string>()));
    }
    std::string tag = r.value("tag", std::string("row"));
    system.add_row(
        LinearInequality(std::move(coeffs), parse_rational(r.at("rhs").get<std::string>()),
                         std::move(tag)));
  }
  return system;
}

}  // namespace multipoly
