#include "vnr/io/csv.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>

#include "vnr/errors.hpp"

namespace vnr::io {
namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

bool blank(const std::vector<std::string>& record) {
  return std::all_of(record.begin(), record.end(), [](const std::string& f) { return trim(f).empty(); });
}

ScoreCell parse_cell(const std::string& raw, std::size_t line, const std::string& task) {
  const std::string s = trim(raw);
  if (s.empty()) return std::nullopt;
  double v = 0.0;
  const char* first = s.data();
  if (*first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v)) {
    throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ", task '" + task + "': '" + s + "' is not a finite number");
  }
  return v;
}

std::string quote(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::size_t task_of(const Leaderboard& lb, const std::string& name) {
  for (std::size_t t = 0; t < lb.num_tasks(); ++t) {
    if (lb.tasks()[t] == name) return t;
  }
  throw Error(ErrorCode::ParseError, "sidecar names unknown task '" + name + "'");
}

}  // namespace

std::vector<std::vector<std::string>> parse_csv(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false, field_started = false;
  std::size_t line = 1;
  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    records.push_back(std::move(record));
    record.clear();
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        if (c == '\n') ++line;
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!trim(field).empty()) throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": stray quote");
        field.clear();
        quoted = field_started = true;
        break;
      case ',': end_field(); break;
      case '\r': break;
      case '\n':
        end_record();
        ++line;
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) throw Error(ErrorCode::ParseError, "unterminated quoted field");
  if (field_started || !field.empty() || !record.empty()) end_record();
  return records;
}

Leaderboard parse_leaderboard(std::string_view text) {
  auto records = parse_csv(text);
  records.erase(std::remove_if(records.begin(), records.end(), blank), records.end());
  if (records.empty()) throw Error(ErrorCode::ParseError, "empty input");

  const auto& header = records.front();
  if (trim(header.front()) != "system") throw Error(ErrorCode::ParseError, "header must start with 'system'");
  std::vector<std::string> tasks;
  for (std::size_t i = 1; i < header.size(); ++i) tasks.push_back(trim(header[i]));
  const std::size_t width = header.size();

  std::vector<std::string> systems;
  std::vector<std::vector<ScoreCell>> scores;
  std::vector<Direction> directions;
  std::vector<double> weights;
  std::vector<std::optional<std::string>> groups;
  for (std::size_t r = 1; r < records.size(); ++r) {
    auto rec = records[r];
    const std::size_t line = r + 1;
    if (rec.size() > width) throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + " has too many fields");
    rec.resize(width);
    const std::string key = trim(rec.front());
    if (key == "#direction") {
      for (std::size_t i = 1; i < width; ++i) {
        const std::string d = trim(rec[i]);
        if (d == "max" || d.empty()) {
          directions.push_back(Direction::Maximize);
        } else if (d == "min") {
          directions.push_back(Direction::Minimize);
        } else {
          throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": direction must be max or min");
        }
      }
    } else if (key == "#weight") {
      for (std::size_t i = 1; i < width; ++i) {
        const auto w = parse_cell(rec[i], line, tasks[i - 1]);
        weights.push_back(w ? *w : 1.0);
      }
    } else if (key == "#group") {
      for (std::size_t i = 1; i < width; ++i) {
        const std::string g = trim(rec[i]);
        groups.push_back(g.empty() ? std::nullopt : std::optional<std::string>(g));
      }
    } else if (!key.empty() && key.front() == '#') {
      throw Error(ErrorCode::ParseError, "line " + std::to_string(line) + ": unknown directive '" + key + "'");
    } else {
      systems.push_back(key);
      std::vector<ScoreCell> row;
      for (std::size_t i = 1; i < width; ++i) row.push_back(parse_cell(rec[i], line, tasks[i - 1]));
      scores.push_back(std::move(row));
    }
  }
  try {
    return Leaderboard(std::move(systems), std::move(tasks), std::move(scores), std::move(directions), std::move(weights),
                       std::move(groups));
  } catch (const Error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Leaderboard read_leaderboard(const std::filesystem::path& path) { return parse_leaderboard(read_text_file(path)); }

std::string format_leaderboard(const Leaderboard& lb) {
  std::string out = "system";
  for (const auto& t : lb.tasks()) out += "," + quote(t);
  out += "\n#direction";
  for (auto d : lb.directions()) out += d == Direction::Maximize ? ",max" : ",min";
  out += "\n#weight";
  for (double w : lb.weights()) out += "," + format_double(w);
  if (lb.has_groups()) {
    out += "\n#group";
    for (const auto& g : lb.groups()) out += "," + (g ? quote(*g) : std::string());
  }
  out += "\n";
  for (std::size_t s = 0; s < lb.num_systems(); ++s) {
    out += quote(lb.systems()[s]);
    for (std::size_t t = 0; t < lb.num_tasks(); ++t) {
      out += ",";
      if (const auto& c = lb.score(s, t)) out += format_double(*c);
    }
    out += "\n";
  }
  return out;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
  try {
    return nlohmann::json::parse(read_text_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, "'" + path.string() + "': " + e.what());
  }
}

Leaderboard apply_groups(const Leaderboard& lb, const nlohmann::json& groups) {
  if (!groups.is_object()) throw Error(ErrorCode::ParseError, "groups file must hold an object of task -> group");
  std::vector<std::optional<std::string>> g(lb.num_tasks());
  for (const auto& [task, value] : groups.items()) {
    const std::size_t t = task_of(lb, task);
    if (value.is_string()) {
      g[t] = value.get<std::string>();
    } else if (!value.is_null()) {
      throw Error(ErrorCode::ParseError, "group of '" + task + "' must be a string or null");
    }
  }
  return lb.with_groups(std::move(g));
}

Leaderboard apply_weights(const Leaderboard& lb, const nlohmann::json& weights) {
  if (!weights.is_object()) throw Error(ErrorCode::ParseError, "weights file must hold an object of task -> weight");
  std::vector<double> w(lb.num_tasks(), 1.0);
  for (const auto& [task, value] : weights.items()) {
    if (!value.is_number()) throw Error(ErrorCode::ParseError, "weight of '" + task + "' must be a number");
    w[task_of(lb, task)] = value.get<double>();
  }
  return lb.with_weights(std::move(w));
}

Leaderboard apply_minimize(const Leaderboard& lb, const std::vector<std::string>& tasks) {
  auto d = lb.directions();
  for (const auto& t : tasks) d[task_of(lb, t)] = Direction::Minimize;
  return lb.with_directions(std::move(d));
}

}  // namespace vnr::io
