#include "od/textio.hpp"

#include <cctype>
#include <sstream>

namespace od {

namespace {

class Cursor {
 public:
  explicit Cursor(const SourceText& src) : text_(src.text) {}

  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, line_, col_); }

  void enter() {
    if (++depth_ > 4000) fail("nesting too deep");
  }
  void leave() { --depth_; }

  void skip_ws() {
    while (pos_ < text_.size()) {
      char c = text_[pos_];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n')
        advance();
      else
        break;
    }
  }

  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (static_cast<unsigned char>(c) > 0x7f) fail("non-ASCII byte");
    return c;
  }

  char take() {
    char c = peek();
    advance();
    return c;
  }

  void expect(char c) {
    char got = take();
    if (got != c) fail(std::string("expected '") + c + "', got '" + got + "'");
  }

  bool try_take(char c) {
    if (done()) return false;
    if (peek() != c) return false;
    advance();
    return true;
  }

  int take_nat() {
    char c = peek();
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a number");
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1000000) fail("number too large");
      advance();
    }
    return static_cast<int>(v);
  }

 private:
  void advance() {
    if (pos_ >= text_.size()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  int depth_ = 0;
};

Term parse_sum(Cursor& cur);

Quad parse_quad(Cursor& cur) {
  cur.expect('(');
  Quad q;
  q.nu = parse_sum(cur);
  cur.expect(',');
  q.kappa = parse_sum(cur);
  cur.expect(',');
  q.tau = parse_sum(cur);
  cur.expect(',');
  q.level = cur.take_nat();
  cur.expect(')');
  return q;
}

Term parse_primary_impl(Cursor& cur) {
  char c = cur.peek();
  switch (c) {
    case '0':
      cur.take();
      return zero();
    case 'W':
      cur.take();
      return omega();
    case 'p':
      cur.take();
      return pi();
    case 'f': {
      cur.take();
      cur.expect('(');
      Term a = parse_sum(cur);
      cur.expect(',');
      Term b = parse_sum(cur);
      cur.expect(')');
      return mk_phi(a, b);
    }
    case 'd': {
      cur.take();
      cur.expect('[');
      Term sub = parse_sum(cur);
      std::vector<Quad> quads;
      if (cur.try_take(';')) {
        quads.push_back(parse_quad(cur));
        while (cur.try_take(',')) quads.push_back(parse_quad(cur));
      }
      cur.expect(']');
      cur.expect('(');
      Term body = parse_sum(cur);
      cur.expect(')');
      try {
        return mk_d(sub, std::move(quads), body);
      } catch (const error& e) {
        cur.fail(e.what());
      }
    }
    default:
      cur.fail(std::string("unexpected character '") + c + "'");
  }
}

Term parse_primary(Cursor& cur) {
  cur.enter();
  Term t = parse_primary_impl(cur);
  cur.leave();
  return t;
}

Term parse_postfix(Cursor& cur) {
  Term t = parse_primary(cur);
  while (cur.try_take('^')) {
    cur.expect('+');
    try {
      t = mk_rsucc(t);
    } catch (const error& e) {
      cur.fail(e.what());
    }
  }
  return t;
}

Term parse_sum(Cursor& cur) {
  std::vector<Term> parts;
  parts.push_back(parse_postfix(cur));
  while (true) {
    if (cur.done()) break;
    char c = cur.peek();
    if (c != '+') break;
    cur.take();
    parts.push_back(parse_postfix(cur));
  }
  return mk_sum(std::move(parts));
}

}  // namespace

Term parse_term(const SourceText& src) {
  Cursor cur(src);
  if (cur.done()) cur.fail("empty input");
  Term t = parse_sum(cur);
  if (!cur.done()) cur.fail("trailing input");
  return t;
}

namespace {

void print_into(const Term& t, std::string& out) {
  switch (t.kind()) {
    case Kind::Zero:
      out += '0';
      return;
    case Kind::Omega:
      out += 'W';
      return;
    case Kind::Pi:
      out += 'p';
      return;
    case Kind::Sum: {
      bool first = true;
      for (const Term& p : t.parts()) {
        if (!first) out += '+';
        first = false;
        print_into(p, out);
      }
      return;
    }
    case Kind::Phi:
      out += "f(";
      print_into(t.phi_first(), out);
      out += ',';
      print_into(t.phi_second(), out);
      out += ')';
      return;
    case Kind::RSucc:
      print_into(t.rsucc_base(), out);
      out += "^+";
      return;
    case Kind::D: {
      out += "d[";
      print_into(t.sub(), out);
      const auto& qs = t.quads();
      if (!qs.empty()) {
        out += ';';
        bool first = true;
        for (const Quad& q : qs) {
          if (!first) out += ',';
          first = false;
          out += '(';
          print_into(q.nu, out);
          out += ',';
          print_into(q.kappa, out);
          out += ',';
          print_into(q.tau, out);
          out += ',';
          out += std::to_string(q.level);
          out += ')';
        }
      }
      out += "](";
      print_into(t.body(), out);
      out += ')';
      return;
    }
  }
}

}  // namespace

std::string print_term(const Term& t) {
  std::string out;
  print_into(t, out);
  return out;
}

std::string print_quads(const std::vector<Quad>& q) {
  std::string out;
  bool first = true;
  for (const Quad& quad : q) {
    if (!first) out += ',';
    first = false;
    out += '(';
    out += print_term(quad.nu);
    out += ',';
    out += print_term(quad.kappa);
    out += ',';
    out += print_term(quad.tau);
    out += ',';
    out += std::to_string(quad.level);
    out += ')';
  }
  return out;
}

namespace {

std::vector<int> parse_int_list(const std::string& value, int line_no) {
  std::vector<int> out;
  std::string token;
  std::stringstream ss(value);
  while (std::getline(ss, token, ',')) {
    std::size_t a = token.find_first_not_of(" \t");
    if (a == std::string::npos) continue;
    std::size_t b = token.find_last_not_of(" \t");
    token = token.substr(a, b - a + 1);
    try {
      out.push_back(std::stoi(token));
    } catch (...) {
      throw parse_error("bad integer '" + token + "'", line_no, 1);
    }
  }
  return out;
}

Term parse_term_at(const std::string& value, int line_no) {
  try {
    return parse_term({value});
  } catch (const parse_error& e) {
    throw parse_error(e.what(), line_no, e.col);
  }
}

}  // namespace

DescriptorFile parse_descriptor(const SourceText& src) {
  DescriptorFile out;
  bool have_n = false, have_sigmas = false, have_knots = false, have_indices = false,
       have_body = false, have_st_top = false;
  std::stringstream ss(src.text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    std::size_t a = line.find_first_not_of(" \t\r");
    if (a == std::string::npos) continue;
    if (line[a] == '#') continue;
    std::size_t colon = line.find(':', a);
    if (colon == std::string::npos) throw parse_error("missing ':'", line_no, 1);
    std::string key = line.substr(a, colon - a);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    std::string value = line.substr(colon + 1);
    while (!value.empty() && (value.back() == '\r' || value.back() == ' ')) value.pop_back();

    if (key == "N") {
      out.desc.n_levels = parse_int_list(value, line_no).at(0);
      have_n = true;
    } else if (key == "sigmas") {
      // split on ';' at bracket depth zero only: spellings of diagrams
      // with a Q part contain ';' themselves
      std::string spelling;
      int depth = 0;
      auto flush = [&]() {
        if (spelling.find_first_not_of(" \t") != std::string::npos)
          out.desc.sigmas.push_back(parse_term_at(spelling, line_no));
        spelling.clear();
      };
      for (char c : value) {
        if (c == '[' || c == '(') ++depth;
        if (c == ']' || c == ')') --depth;
        if (c == ';' && depth == 0) {
          flush();
          continue;
        }
        spelling += c;
      }
      flush();
      have_sigmas = true;
    } else if (key == "knots") {
      out.desc.knot_numbers = parse_int_list(value, line_no);
      have_knots = true;
    } else if (key == "indices") {
      out.desc.knot_indices = parse_int_list(value, line_no);
      have_indices = true;
    } else if (key == "body") {
      out.inputs.body = parse_term_at(value, line_no);
      have_body = true;
    } else if (key == "st_top") {
      out.inputs.st_top = parse_term_at(value, line_no);
      have_st_top = true;
    } else if (key.rfind("st[", 0) == 0 && key.back() == ']') {
      int level;
      try {
        level = std::stoi(key.substr(3, key.size() - 4));
      } catch (...) {
        throw parse_error("bad st level '" + key + "'", line_no, 1);
      }
      out.inputs.st_lower[level] = parse_term_at(value, line_no);
    } else {
      throw parse_error("unknown field '" + key + "'", line_no, 1);
    }
  }
  if (!have_n) throw parse_error("missing field N", line_no, 1);
  if (!have_sigmas) throw parse_error("missing field sigmas", line_no, 1);
  if (!have_knots) throw parse_error("missing field knots", line_no, 1);
  if (!have_indices) throw parse_error("missing field indices", line_no, 1);
  if (!have_body) throw parse_error("missing field body", line_no, 1);
  if (!have_st_top) throw parse_error("missing field st_top", line_no, 1);
  try {
    validate_descriptor(out.desc);
    for (const auto& [level, term] : out.inputs.st_lower) {
      if (level < 2 || level > out.desc.n_levels - 2)
        throw error("st level out of range: " + std::to_string(level));
      (void)term;
    }
  } catch (const error& e) {
    throw parse_error(e.what(), line_no, 1);
  }
  return out;
}

}  // namespace od
