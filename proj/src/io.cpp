#include "novelty/io.hpp"

#include <unistd.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <istream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace novelty::io {

std::optional<FillPolicy> parse_fill_policy(std::string_view name) {
  if (name == "forward_fill") return FillPolicy::kForwardFill;
  if (name == "strict") return FillPolicy::kStrict;
  return std::nullopt;
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(',', start);
    out.push_back(trim(line.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

/// Reads a CSV with a fixed header and calls `on_row(row_number, fields)`.
template <typename OnRow>
void read_csv(std::istream& in, std::string_view header, std::size_t n_fields, OnRow&& on_row) {
  std::string line;
  if (!std::getline(in, line)) throw ParseError(0, "empty file");
  if (trim(line) != header) {
    throw ParseError(0, "expected header '" + std::string(header) + "', got '" + std::string(trim(line)) + "'");
  }
  std::size_t row = 0;
  std::size_t data_rows = 0;
  while (std::getline(in, line)) {
    ++row;
    if (trim(line).empty()) continue;
    auto fields = split(line);
    if (fields.size() != n_fields) {
      throw ParseError(row, "expected " + std::to_string(n_fields) + " fields, got " + std::to_string(fields.size()));
    }
    on_row(row, fields);
    ++data_rows;
  }
  if (data_rows == 0) throw ParseError(0, "empty file (header only)");
}

int parse_int(std::string_view s, std::size_t row, std::string_view field) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    throw ParseError(row, "malformed " + std::string(field) + " '" + std::string(s) + "'");
  }
  return v;
}

double parse_real(std::string_view s, std::size_t row, std::string_view field) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty() || !std::isfinite(v)) {
    throw ParseError(row, "malformed " + std::string(field) + " '" + std::string(s) + "'");
  }
  return v;
}

std::ifstream open_input(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return in;
}

struct RawSample {
  int t;
  double n;
  std::size_t row;
};

}  // namespace

Cohort parse_traces(std::istream& in, FillPolicy policy) {
  std::vector<std::string> ids;
  std::vector<std::vector<RawSample>> groups;
  std::unordered_map<std::string, std::size_t> index;

  read_csv(in, "story_id,t_min,diggs", 3, [&](std::size_t row, const std::vector<std::string_view>& f) {
    if (f[0].empty()) throw ParseError(row, "empty story_id");
    const int t = parse_int(f[1], row, "t_min");
    if (t < 0) throw ParseError(row, "t_min must be >= 0");
    const double n = parse_real(f[2], row, "diggs");
    if (!(n > 0.0)) throw ParseError(row, "diggs must be > 0");
    auto [it, inserted] = index.try_emplace(std::string(f[0]), ids.size());
    if (inserted) {
      ids.emplace_back(f[0]);
      groups.emplace_back();
    }
    groups[it->second].push_back({t, n, row});
  });

  std::vector<StoryTrace> traces;
  traces.reserve(ids.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    auto& raw = groups[g];
    std::stable_sort(raw.begin(), raw.end(), [](const RawSample& a, const RawSample& b) { return a.t < b.t; });
    if (raw.front().t != 0) throw ParseError(raw.front().row, "story '" + ids[g] + "': missing t=0");
    std::vector<Sample> samples;
    samples.reserve(static_cast<std::size_t>(raw.back().t) + 1);
    samples.push_back({0, raw.front().n});
    for (std::size_t k = 1; k < raw.size(); ++k) {
      const RawSample& cur = raw[k];
      const RawSample& prev = raw[k - 1];
      if (cur.t == prev.t) {
        throw ParseError(cur.row, "story '" + ids[g] + "': duplicate t_min " + std::to_string(cur.t));
      }
      if (cur.n < prev.n) {
        throw ParseError(cur.row, "story '" + ids[g] + "': non-monotone count at t=" + std::to_string(cur.t));
      }
      if (cur.t > prev.t + 1) {
        if (policy == FillPolicy::kStrict) {
          throw ParseError(cur.row, "story '" + ids[g] + "': gap at t=" + std::to_string(prev.t + 1));
        }
        for (int t = prev.t + 1; t < cur.t; ++t) samples.push_back({t, prev.n});
      }
      samples.push_back({cur.t, cur.n});
    }
    traces.emplace_back(ids[g], std::move(samples));
  }
  return Cohort(std::move(traces));
}

Cohort ingest_traces(const std::filesystem::path& path, FillPolicy policy) {
  auto in = open_input(path);
  return parse_traces(in, policy);
}

std::vector<double> parse_saturation(std::istream& in) {
  std::vector<double> values;
  std::unordered_set<std::string> seen;
  read_csv(in, "story_id,n_inf", 2, [&](std::size_t row, const std::vector<std::string_view>& f) {
    if (f[0].empty()) throw ParseError(row, "empty story_id");
    const double v = parse_real(f[1], row, "n_inf");
    if (!(v > 0.0)) throw ParseError(row, "n_inf must be > 0");
    if (!seen.emplace(f[0]).second) throw ParseError(row, "duplicate id '" + std::string(f[0]) + "'");
    values.push_back(v);
  });
  return values;
}

std::vector<double> ingest_saturation(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_saturation(in);
}

NoveltyCurve parse_novelty(std::istream& in) {
  std::vector<double> r;
  read_csv(in, "t,r", 2, [&](std::size_t row, const std::vector<std::string_view>& f) {
    const int t = parse_int(f[0], row, "t");
    if (t != static_cast<int>(r.size()) + 1) {
      throw ParseError(row, "expected t=" + std::to_string(r.size() + 1) + ", got " + std::to_string(t));
    }
    r.push_back(parse_real(f[1], row, "r"));
  });
  if (r.front() != 1.0) throw ParseError(1, "r at t=1 must be exactly 1");
  return NoveltyCurve::estimated(std::move(r));
}

NoveltyCurve ingest_novelty(const std::filesystem::path& path) {
  auto in = open_input(path);
  return parse_novelty(in);
}

std::vector<double> parse_initial_counts(std::istream& in) {
  std::vector<double> values;
  read_csv(in, "n0", 1, [&](std::size_t row, const std::vector<std::string_view>& f) {
    const double v = parse_real(f[0], row, "n0");
    if (!(v > 0.0)) throw ParseError(row, "n0 must be > 0");
    values.push_back(v);
  });
  return values;
}

std::string format_number(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string traces_csv(const Cohort& cohort) {
  std::string out = "story_id,t_min,diggs\n";
  for (const auto& tr : cohort.traces()) {
    for (const auto& s : tr.samples()) {
      out += tr.id();
      out += ',';
      out += std::to_string(s.t);
      out += ',';
      out += format_number(s.n);
      out += '\n';
    }
  }
  return out;
}

std::string novelty_csv(const NoveltyCurve& curve) {
  std::string out = "t,r\n";
  for (int t = 1; t <= curve.horizon(); ++t) out += std::to_string(t) + ',' + format_number(curve.at(t)) + '\n';
  return out;
}

std::string mean_variance_csv(const MeanVarSeries& series) {
  std::string out = "t,mean,variance\n";
  for (const auto& p : series.points()) {
    out += std::to_string(p.t) + ',' + format_number(p.mean) + ',' + format_number(p.variance) + '\n';
  }
  return out;
}

std::string qq_csv(std::span<const QqPoint> points) {
  std::string out = "theoretical_z,sample_log_value\n";
  for (const auto& p : points) out += format_number(p.theoretical_z) + ',' + format_number(p.sample_value) + '\n';
  return out;
}

std::string histogram_csv(const LogHistogram& hist) {
  std::string out = "bin,log_lo,log_hi,lo,hi,count\n";
  for (std::size_t i = 0; i < hist.counts.size(); ++i) {
    const double lo = hist.log_edges[i];
    const double hi = hist.log_edges[i + 1];
    out += std::to_string(i) + ',' + format_number(lo) + ',' + format_number(hi) + ',' +
           format_number(std::exp(lo)) + ',' + format_number(std::exp(hi)) + ',' + std::to_string(hist.counts[i]) +
           '\n';
  }
  return out;
}

void write_file_atomic(const std::filesystem::path& path, std::string_view content) {
  auto tmp = path;
  tmp += ".tmp-" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot open " + tmp.string() + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    out.flush();
    if (!out) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw Error("write failed for " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp, ec);
    throw Error("cannot rename into " + path.string());
  }
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string hex_digest(std::uint64_t digest) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(digest));
  return buf;
}

}  // namespace novelty::io
