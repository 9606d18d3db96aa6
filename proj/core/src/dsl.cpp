#include "spweb/dsl.hpp"

#include <cctype>

namespace spweb {

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;
  int line = 1, col = 1;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  char get() {
    char c = s[pos++];
    if (c == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
    return c;
  }
  void skip_ws() {
    while (!done() && std::isspace((unsigned char)peek())) get();
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, line, col); }
  long integer() {
    skip_ws();
    int l = line, c = col;
    bool neg = false;
    if (peek() == '-') {
      neg = true;
      get();
    }
    if (!std::isdigit((unsigned char)peek())) throw ParseError("expected an integer", l, c);
    long v = 0;
    while (!done() && std::isdigit((unsigned char)peek())) v = v * 10 + (get() - '0');
    return neg ? -v : v;
  }
  std::string word() {
    skip_ws();
    int l = line, c = col;
    std::string w;
    while (!done() && (std::isalnum((unsigned char)peek()) || peek() == '_')) w += get();
    if (w.empty()) throw ParseError("expected a word", l, c);
    return w;
  }
};

}  // namespace

SliceWord parse_diagram_dsl(const std::string& text) {
  Cursor c{text};
  SliceWord w;
  bool have_width = false;
  while (true) {
    c.skip_ws();
    while (!c.done() && (c.peek() == ';' || c.peek() == '\n')) {
      c.get();
      c.skip_ws();
    }
    if (c.done()) break;
    int l = c.line, cc = c.col;
    std::string tok = c.word();
    if (tok == "width") {
      if (have_width) throw ParseError("duplicate width declaration", l, cc);
      long v = c.integer();
      if (v < 0) throw ParseError("width must be nonnegative", l, cc);
      w.bottom_width = (int)v;
      have_width = true;
    } else if (tok == "X" || tok == "A" || tok == "U") {
      if (!have_width) throw ParseError("generator before width declaration", l, cc);
      long v = c.integer();
      if (v < 1) throw ParseError("positions are 1-based", l, cc);
      Gen g = tok == "X" ? Gen::Cross : tok == "A" ? Gen::Cap : Gen::Cup;
      w.slices.push_back({g, (int)v});
    } else {
      throw ParseError("unknown generator '" + tok + "'", l, cc);
    }
  }
  if (!have_width) throw ParseError("missing width declaration", 1, 1);
  w.top_width();  // validate widths; throws MalformedSliceWord
  return w;
}

std::string print_diagram_dsl(const SliceWord& w) { return w.str(); }

namespace {

Web parse_web_expr(Cursor& c) {
  c.skip_ws();
  int l = c.line, cc = c.col;
  if (c.peek() != '(') c.fail("expected '('");
  c.get();
  std::string head = c.word();
  Web out;
  if (head == "id") {
    out = Web::id((int)c.integer());
  } else if (head == "cap") {
    out = Web::cap((int)c.integer());
  } else if (head == "cup") {
    out = Web::cup((int)c.integer());
  } else if (head == "m") {
    int k = (int)c.integer();
    out = Web::merge(k, (int)c.integer());
  } else if (head == "s") {
    int k = (int)c.integer();
    out = Web::split(k, (int)c.integer());
  } else if (head == "v3") {
    int k = (int)c.integer();
    int ll = (int)c.integer();
    out = Web::v3(k, ll, (int)c.integer());
  } else if (head == "ten") {
    Web a = parse_web_expr(c);
    Web b = parse_web_expr(c);
    out = Web::ten(std::move(a), std::move(b));
  } else if (head == "cmp") {
    Web a = parse_web_expr(c);
    Web b = parse_web_expr(c);
    out = Web::cmp(std::move(a), std::move(b));
  } else {
    throw ParseError("unknown web constructor '" + head + "'", l, cc);
  }
  c.skip_ws();
  if (c.peek() != ')') c.fail("expected ')'");
  c.get();
  return out;
}

}  // namespace

Web parse_web_dsl(const std::string& text) {
  Cursor c{text};
  Web w = parse_web_expr(c);
  c.skip_ws();
  if (!c.done()) c.fail("trailing input after web expression");
  return w;
}

std::string print_web_dsl(const Web& w) { return w.str(); }

}  // namespace spweb
