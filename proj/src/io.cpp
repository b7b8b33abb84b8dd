#include "ndt/io.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>
#include <sstream>
#include <vector>

#include "ndt/error.hpp"

namespace ndt {

namespace {

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) words.push_back(line.substr(start, i - start));
  }
  return words;
}

[[noreturn]] void fail(int line_no, const std::string& what) {
  throw InputError("line " + std::to_string(line_no) + ": " + what);
}

int parse_int(std::string_view word, int line_no) {
  int value = 0;
  const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size() || value < 0)
    fail(line_no, "expected a non-negative integer, got '" + std::string(word) + "'");
  return value;
}

}  // namespace

Digraph parse_digraph(std::string_view text) {
  bool have_header = false;
  int n = 0;
  int m = 0;
  std::vector<Arc> arcs;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const auto words = split_words(line);
    if (words.empty() || words[0].front() == '#') continue;
    if (!have_header) {
      if (words.size() != 4 || words[0] != "p" || words[1] != "ndt")
        fail(line_no, "expected header 'p ndt <n> <m>'");
      n = parse_int(words[2], line_no);
      m = parse_int(words[3], line_no);
      have_header = true;
      arcs.reserve(static_cast<std::size_t>(m));
      continue;
    }
    if (words.size() != 3 || words[0] != "a") fail(line_no, "expected arc line 'a <tail> <head>'");
    const int tail = parse_int(words[1], line_no);
    const int head = parse_int(words[2], line_no);
    if (tail >= n || head >= n) fail(line_no, "vertex id out of range");
    if (tail == head) fail(line_no, "loops are not allowed");
    if (static_cast<int>(arcs.size()) == m) fail(line_no, "more arc lines than announced");
    arcs.push_back({tail, head});
  }
  if (!have_header) throw InputError("missing header 'p ndt <n> <m>'");
  if (static_cast<int>(arcs.size()) != m)
    throw InputError("expected " + std::to_string(m) + " arc lines, found " +
                     std::to_string(arcs.size()));
  return Digraph(n, std::move(arcs));
}

Digraph parse_digraph(std::istream& in) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  return parse_digraph(text);
}

void write_digraph(std::ostream& out, const Digraph& d, std::string_view comment) {
  if (!comment.empty()) out << "# " << comment << '\n';
  out << "p ndt " << d.num_vertices() << ' ' << d.num_arcs() << '\n';
  for (const Arc& a : d.arcs()) out << "a " << a.tail << ' ' << a.head << '\n';
}

std::string format_digraph(const Digraph& d, std::string_view comment) {
  std::ostringstream out;
  write_digraph(out, d, comment);
  return out.str();
}

std::string fnv1a_digest(std::string_view bytes) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, hash >>= 4) out[static_cast<std::size_t>(i)] = kHex[hash & 0xF];
  return out;
}

}  // namespace ndt
