#include "pmint/instance_io.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "pmint/error.hpp"

namespace pmint {

namespace {

struct Token {
  std::int64_t value;
  int column;  // 1-based
};

struct Record {
  int line;
  std::vector<Token> tokens;
};

bool is_blank(char c) { return c == ' ' || c == '\t'; }

std::vector<Token> tokenize(std::string_view line, int line_no) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (is_blank(line[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !is_blank(line[j])) ++j;
    const std::string_view word = line.substr(i, j - i);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
    const int column = static_cast<int>(i) + 1;
    if (ec == std::errc::result_out_of_range)
      throw ParseError(line_no, column, "integer out of range: '" + std::string(word) + "'");
    if (ec != std::errc() || ptr != word.data() + word.size())
      throw ParseError(line_no, column, "expected an integer, found '" + std::string(word) + "'");
    tokens.push_back({value, column});
    i = j;
  }
  return tokens;
}

void expect_count(const Record& r, std::size_t count, const char* what) {
  if (r.tokens.size() != count) {
    const int column = r.tokens.size() > count ? r.tokens[count].column : 1;
    throw ParseError(r.line, column,
                     std::string(what) + " needs " + std::to_string(count) + " integers, found " +
                         std::to_string(r.tokens.size()));
  }
}

void append_ids(std::ostringstream& out, const char* key, const std::vector<VertexId>& ids) {
  out << key;
  for (auto id : ids) out << ' ' << id;
  out << '\n';
}

}  // namespace

Instance parse_instance(std::string_view text) {
  Instance inst;
  std::vector<Record> records;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (const auto cr = line.find('\r'); cr != std::string_view::npos)
      throw ParseError(line_no, static_cast<int>(cr) + 1, "carriage return; use LF line endings");

    const auto hash = line.find('#');
    const auto first = line.find_first_not_of(" \t");
    if (hash != std::string_view::npos && first == hash) {
      std::string_view note = line.substr(hash + 1);
      if (!note.empty() && note.front() == ' ') note.remove_prefix(1);
      inst.comments.emplace_back(note);
      continue;
    }
    if (hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line, line_no);
    if (!tokens.empty()) records.push_back({line_no, std::move(tokens)});
  }

  const int last_line = std::max(line_no, 1);
  if (records.empty()) throw ParseError(last_line, 1, "missing header line 'n m'");
  const Record& header = records[0];
  expect_count(header, 2, "header 'n m'");
  const std::int64_t n = header.tokens[0].value;
  const std::int64_t m = header.tokens[1].value;
  if (n < 1 || n > 1'000'000) throw ParseError(header.line, header.tokens[0].column, "n must lie in 1..1000000");
  if (m < 0) throw ParseError(header.line, header.tokens[1].column, "m must be nonnegative");

  if (records.size() < 2) throw ParseError(last_line, 1, "missing line 'p B'");
  const Record& params = records[1];
  expect_count(params, 2, "line 'p B'");
  const std::int64_t p = params.tokens[0].value;
  const std::int64_t budget = params.tokens[1].value;
  if (p < 1 || p > n) throw ParseError(params.line, params.tokens[0].column, "p must lie in 1..n");
  if (budget < 0) throw ParseError(params.line, params.tokens[1].column, "budget must be nonnegative");

  if (static_cast<std::int64_t>(records.size()) - 2 < m)
    throw ParseError(last_line, 1,
                     "expected " + std::to_string(m) + " edge lines, found " +
                         std::to_string(records.size() - 2));
  if (static_cast<std::int64_t>(records.size()) - 2 > m) {
    const Record& extra = records[static_cast<std::size_t>(m) + 2];
    throw ParseError(extra.line, extra.tokens[0].column, "data after the last edge line");
  }

  std::vector<Edge> edges;
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::size_t i = 2; i < records.size(); ++i) {
    const Record& r = records[i];
    expect_count(r, 4, "edge line 'u v length cost'");
    const auto& t = r.tokens;
    for (int k = 0; k < 2; ++k)
      if (t[static_cast<std::size_t>(k)].value < 1 || t[static_cast<std::size_t>(k)].value > n)
        throw ParseError(r.line, t[static_cast<std::size_t>(k)].column, "vertex id out of range 1..n");
    if (t[0].value == t[1].value) throw ParseError(r.line, t[1].column, "self-loop");
    if (!seen.emplace(std::min(t[0].value, t[1].value), std::max(t[0].value, t[1].value)).second)
      throw ParseError(r.line, t[0].column, "parallel edge");
    if (t[2].value < 0) throw ParseError(r.line, t[2].column, "length must be nonnegative");
    if (t[3].value < 1) throw ParseError(r.line, t[3].column, "cost must be at least 1");
    edges.push_back({static_cast<VertexId>(t[0].value), static_cast<VertexId>(t[1].value),
                     t[2].value, t[3].value});
  }
  inst.graph = Graph(static_cast<VertexId>(n), std::move(edges));
  inst.p = static_cast<int>(p);
  inst.budget = budget;
  return inst;
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  for (const auto& c : instance.comments) out << (c.empty() ? "#" : "# " + c) << '\n';
  out << instance.graph.vertex_count() << ' ' << instance.graph.edge_count() << '\n';
  out << instance.p << ' ' << instance.budget << '\n';
  for (const Edge& e : instance.graph.edges())
    out << e.u << ' ' << e.v << ' ' << e.length << ' ' << e.cost << '\n';
  return out.str();
}

std::string serialize_result(const SolveResult& result) {
  std::ostringstream out;
  out << "algorithm " << algorithm_name(result.algorithm) << '\n';
  out << "value " << result.value.to_string() << '\n';
  append_ids(out, "strategy", result.strategy.edge_ids());
  out << "cost " << result.strategy.total_cost() << '\n';
  append_ids(out, "facilities", result.locator_response.vertices());
  if (!result.note.empty()) out << "note " << result.note << '\n';
  return out.str();
}

}  // namespace pmint
