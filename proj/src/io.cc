// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#include "motifqc/io.h"

#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "absl/status/status.h"

namespace motifqc {
namespace {

std::string_view Trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
    s.remove_prefix(1);
  }
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
    s.remove_suffix(1);
  }
  return s;
}

std::vector<std::string_view> Split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  size_t start = 0;
  for (size_t i = 0; i <= s.size(); ++i) {
    if (i == s.size() || s[i] == sep) {
      out.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  }
  return out;
}

std::vector<std::string_view> Fields(std::string_view s) {
  std::vector<std::string_view> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

bool ParseInt(std::string_view s, int64_t& out) {
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, out);
  return ec == std::errc() && ptr == end;
}

absl::Status LineError(int line, const std::string& what) {
  return absl::InvalidArgumentError("line " + std::to_string(line) + ": " + what);
}

// JSON has no infinity; open-ended bounds serialize as null.
nlohmann::json Number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x;
}

nlohmann::json Vector(const std::vector<double>& v) {
  nlohmann::json out = nlohmann::json::array();
  for (double x : v) out.push_back(Number(x));
  return out;
}

}  // namespace

std::string EdgeListText(const Graph& g) {
  std::string out = "n " + std::to_string(g.n()) + "\n";
  for (const Edge& e : g.Edges()) {
    out += std::to_string(e.first) + " " + std::to_string(e.second) + "\n";
  }
  return out;
}

absl::StatusOr<Graph> ParseEdgeList(std::string_view text) {
  int64_t n = -1;
  std::vector<Edge> edges;
  int line_no = 0;
  for (std::string_view raw : Split(text, '\n')) {
    ++line_no;
    const std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    const std::vector<std::string_view> f = Fields(line);
    if (n < 0) {
      if (f.size() != 2 || f[0] != "n" || !ParseInt(f[1], n) || n < 0 ||
          n > std::numeric_limits<int>::max()) {
        return LineError(line_no, "expected header `n <count>`");
      }
      continue;
    }
    int64_t u = 0, v = 0;
    if (f.size() != 2 || !ParseInt(f[0], u) || !ParseInt(f[1], v)) {
      return LineError(line_no, "expected `u v`");
    }
    if (u < 0 || v >= n || u >= v) {
      return LineError(line_no, "need 0 <= u < v < n");
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (n < 0) return absl::InvalidArgumentError("missing header `n <count>`");
  return Graph::FromEdges(static_cast<int>(n), edges);
}

absl::StatusOr<Graph> ReadEdgeListFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  absl::StatusOr<Graph> g = ParseEdgeList(buf.str());
  if (!g.ok()) return absl::InvalidArgumentError(path + ": " + std::string(g.status().message()));
  return g;
}

absl::Status WriteEdgeListFile(const std::string& path, const Graph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return absl::PermissionDeniedError("cannot write " + path);
  out << EdgeListText(g);
  return out ? absl::OkStatus() : absl::DataLossError("write failed: " + path);
}

absl::StatusOr<NC0Terms> ParseNc0Terms(int n, std::string_view text) {
  NC0Terms out;
  out.n = n;
  for (std::string_view term_text : Split(text, ';')) {
    term_text = Trim(term_text);
    if (term_text.empty()) continue;
    Term term;
    for (std::string_view lit_text : Split(term_text, ',')) {
      lit_text = Trim(lit_text);
      Literal lit;
      if (!lit_text.empty() && lit_text.front() == '!') {
        lit.positive = false;
        lit_text.remove_prefix(1);
      }
      const std::vector<std::string_view> ends = Split(lit_text, '-');
      int64_t a = 0, b = 0;
      if (ends.size() != 2 || !ParseInt(Trim(ends[0]), a) || !ParseInt(Trim(ends[1]), b)) {
        return absl::InvalidArgumentError("bad literal: " + std::string(lit_text));
      }
      if (a < 0 || b < 0 || a >= n || b >= n || a == b) {
        return absl::InvalidArgumentError("literal out of range: " + std::string(lit_text));
      }
      lit.a = static_cast<Vertex>(a);
      lit.b = static_cast<Vertex>(b);
      term.push_back(lit);
    }
    out.terms.push_back(std::move(term));
  }
  if (out.terms.empty()) return absl::InvalidArgumentError("no terms");
  return out;
}

nlohmann::json CheckJson(const Check& c) {
  return {{"subject", c.subject}, {"level", c.level},   {"observed", Number(c.observed)},
          {"low", Number(c.low)}, {"high", Number(c.high)}, {"passed", c.passed}};
}

nlohmann::json VerdictJson(const Verdict& v) {
  nlohmann::json out;
  out["decision"] = v.accepted() ? "accept" : "reject";
  out["stage"] = v.stage;
  out["failing_check"] = v.failing ? CheckJson(*v.failing) : nlohmann::json(nullptr);
  out["queries"] = {{"matrix", v.queries.matrix},
                    {"list", v.queries.list},
                    {"degree", v.queries.degree}};
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : v.checks) checks.push_back(CheckJson(c));
  out["checks"] = std::move(checks);
  out["wall_seconds"] = v.wall_seconds;
  out["warnings"] = v.warnings;
  return out;
}

nlohmann::json ParamTableJson(const ParamTable& t) {
  return {{"kind", ScheduleName(t.kind)},
          {"mode", ScaleName(t.mode)},
          {"k", t.k},
          {"p", t.p},
          {"eps", t.eps},
          {"eps_ell", Vector(t.eps_ell)},
          {"alpha_ell", Vector(t.alpha_ell)},
          {"s_ell", Vector(t.s_ell)},
          {"s_star", Number(t.s_star)},
          {"r_ell", Vector(t.r_ell)},
          {"c_const", t.c_const},
          {"delta_jumbled", t.delta_jumbled},
          {"per_level_thresholds", t.per_level_thresholds},
          {"warnings", t.warnings}};
}

nlohmann::json ModelRateJson(const ModelRate& r) {
  return {{"model", r.model},
          {"trials", r.trials},
          {"accepts", r.accepts},
          {"rejects", r.rejects},
          {"errors", r.errors},
          {"rate", r.rate},
          {"error_rate", r.error_rate},
          {"standard_error", r.standard_error},
          {"interval", {r.interval.low, r.interval.high}}};
}

}  // namespace motifqc
