// Copyright 2026 The motifqc Authors.
// SPDX-License-Identifier: Apache-2.0

#ifndef MOTIFQC_IO_H_
#define MOTIFQC_IO_H_

#include <string>
#include <string_view>

#include "absl/status/statusor.h"
#include "json.hpp"
#include "motifqc/graph.h"
#include "motifqc/harness.h"
#include "motifqc/nc0.h"
#include "motifqc/params.h"
#include "motifqc/testers.h"

namespace motifqc {

// Edge-list text: a line `n <count>`, then one `u v` line per edge with
// 0-indexed u < v. Lines starting with '#' and blank lines are skipped.
std::string EdgeListText(const Graph& g);
// Errors are InvalidArgument and name the offending line.
absl::StatusOr<Graph> ParseEdgeList(std::string_view text);
absl::StatusOr<Graph> ReadEdgeListFile(const std::string& path);
absl::Status WriteEdgeListFile(const std::string& path, const Graph& g);

// Terms separated by ';', literals by ','; a literal is `a-b` or `!a-b`.
absl::StatusOr<NC0Terms> ParseNc0Terms(int n, std::string_view text);

nlohmann::json CheckJson(const Check& c);
// Fields: decision, stage, failing_check, queries, checks, wall_seconds, warnings.
nlohmann::json VerdictJson(const Verdict& v);
// Fields: kind, mode, k, p, eps, eps_ell, alpha_ell, s_ell, s_star, r_ell, ...
nlohmann::json ParamTableJson(const ParamTable& t);
nlohmann::json ModelRateJson(const ModelRate& r);

}  // namespace motifqc

#endif  // MOTIFQC_IO_H_
