#include "ebi/io.hpp"

#include <cctype>
#include <charconv>
#include <optional>
#include <string>

#include <json.hpp>

namespace ebi {

namespace {

// Shapes beyond this many cells are rejected before allocation.
constexpr long long kMaxCells = 16'777'216;

std::optional<int> parse_int_token(const char*& cursor, const char* end) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(cursor, end, value);
  if (ec != std::errc() || ptr == cursor) return std::nullopt;
  cursor = ptr;
  return value;
}

std::string printable(char ch) {
  if (std::isprint(static_cast<unsigned char>(ch))) {
    return std::string("'") + ch + "'";
  }
  return "byte " + std::to_string(static_cast<unsigned char>(ch));
}

}  // namespace

std::string serialize_labeling(const Labeling& labeling) {
  const Shape& s = labeling.shape();
  std::string out;
  out.reserve(static_cast<std::size_t>(s.p) * (s.q + 1) + 16);
  out += std::to_string(s.p);
  out += ' ';
  out += std::to_string(s.q);
  out += '\n';
  for (int r = 0; r < s.p; ++r) {
    for (int c = 0; c < s.q; ++c) {
      out += static_cast<char>('0' + labeling.label(r, c));
    }
    out += '\n';
  }
  return out;
}

Labeling parse_labeling(std::string_view text) {
  std::size_t pos = 0;
  std::size_t line_no = 0;
  // Returns the next line without its terminator; the final line may lack one.
  auto take_line = [&]() -> std::optional<std::string_view> {
    if (pos >= text.size()) return std::nullopt;
    ++line_no;
    const std::size_t nl = text.find('\n', pos);
    std::string_view line;
    if (nl == std::string_view::npos) {
      line = text.substr(pos);
      pos = text.size();
    } else {
      line = text.substr(pos, nl - pos);
      pos = nl + 1;
    }
    return line;
  };

  const std::optional<std::string_view> header = take_line();
  if (!header) {
    throw parse_error("missing header line", 1);
  }
  const char* cursor = header->data();
  const char* end = cursor + header->size();
  const std::optional<int> p = parse_int_token(cursor, end);
  if (!p || cursor == end || *cursor != ' ') {
    throw parse_error("header must be \"p q\" with a single space", 1);
  }
  ++cursor;
  const std::optional<int> q = parse_int_token(cursor, end);
  if (!q || cursor != end) {
    throw parse_error("header must be \"p q\" with a single space", 1);
  }
  if (*p < 1 || *q < 1) {
    throw parse_error("both parts must be positive, got p=" +
                          std::to_string(*p) + " q=" + std::to_string(*q),
                      1);
  }
  if (static_cast<long long>(*p) * *q > kMaxCells) {
    throw parse_error("shape " + std::to_string(*p) + "x" +
                          std::to_string(*q) + " exceeds the " +
                          std::to_string(kMaxCells) + "-cell limit",
                      1);
  }

  Labeling labeling(Shape{*p, *q});
  for (int r = 0; r < *p; ++r) {
    const std::optional<std::string_view> row = take_line();
    if (!row) {
      throw parse_error("missing row " + std::to_string(r + 1) + " of " +
                            std::to_string(*p),
                        line_no + 1);
    }
    if (row->size() != static_cast<std::size_t>(*q)) {
      throw parse_error("row " + std::to_string(r + 1) + " has " +
                            std::to_string(row->size()) +
                            " characters, expected " + std::to_string(*q),
                        line_no);
    }
    for (int c = 0; c < *q; ++c) {
      const char ch = (*row)[c];
      if (ch != '0' && ch != '1') {
        throw parse_error("row " + std::to_string(r + 1) + " contains " +
                              printable(ch) + "; rows use only 0 and 1",
                          line_no);
      }
      labeling.set(r, c, ch - '0');
    }
  }
  if (pos < text.size()) {
    throw parse_error("unexpected content after row " + std::to_string(*p),
                      line_no + 1);
  }
  return labeling;
}

std::string evaluation_to_json(const Evaluation& ev) {
  nlohmann::ordered_json j;
  j["e0"] = ev.e0;
  j["e1"] = ev.e1;
  j["v0"] = ev.v0;
  j["v1"] = ev.v1;
  j["unlabeled"] = ev.unlabeled;
  j["index"] = ev.index;
  j["edge_friendly"] = ev.edge_friendly;
  return j.dump();
}

}  // namespace ebi
