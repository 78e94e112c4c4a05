#include "rankbrittle/spec_parser.hpp"

#include <cctype>
#include <charconv>
#include <string>
#include <vector>

#include "rankbrittle/errors.hpp"
#include "rankbrittle/families.hpp"

namespace rankbrittle {

namespace {

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  Graph parse() {
    Graph g = expression();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return g;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw FormatError("graph expression: " + what, pos_); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  int number() {
    skip_space();
    int value = 0;
    const char* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), value);
    if (ec != std::errc{} || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  bool bit() {
    const std::size_t at = pos_;
    const int v = number();
    if (v != 0 && v != 1) {
      pos_ = at;
      fail("link matrix entries must be 0 or 1");
    }
    return v == 1;
  }

  Graph expression() {
    const std::size_t at = pos_;
    const std::string name = word();
    try {
      if (name == "prod" || name == "blown") {
        expect('(');
        const ProductKind kind = parse_product_kind(word());
        expect(',');
        Graph g = expression();
        expect(',');
        Graph h = expression();
        if (name == "prod") {
          expect(')');
          return product(g, h, kind);
        }
        expect(',');
        const int t = number();
        LinkMatrix a;
        for (bool* entry : {&a.a, &a.b, &a.c, &a.d}) {
          expect(',');
          *entry = bit();
        }
        expect(')');
        return blown_product(g, h, kind, t, a);
      }
      if (name == "complement") {
        expect('(');
        Graph g = expression();
        expect(')');
        return complement(g);
      }
      expect(':');
      if (name == "copies") {
        const int k = number();
        expect(':');
        Graph h = expression();
        return copies(k, h);
      }
      const int arg = number();
      const int params[] = {arg};
      return make_family(name, params);
    } catch (const FormatError&) {
      throw;
    } catch (const InputError& e) {
      throw FormatError(std::string("graph expression: ") + e.what(), at);
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Graph parse_graph_expression(std::string_view text) { return Parser(text).parse(); }

}  // namespace rankbrittle
