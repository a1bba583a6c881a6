// Copyright 2026 The dosearch Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Plain-text document formats. Reals are written with 17 significant digits
 * so that every double round-trips bit for bit.
 *
 *   instance  JSON  {"m_levels": M, "n_states": N, "costs": [...]}
 *   cdos      CSV   cost,empirical_nu,ideal_nu,label   (label "data" or "c<i>")
 *   trace     CSV   step,index,re,im,abs
 *   result    JSON  {"winner_index", "success_probability", "steps": [...]}
 *   summary   CSV   trial,offset_vector,success_probability + aggregate rows
 *   factors   JSON  {"dim", "factors": [{"p","q","block"}], "diagonal"}
 */

#pragma once

#include <iosfwd>
#include <string>

#include "dosearch/decompose.h"
#include "dosearch/problem.h"
#include "dosearch/robustness.h"
#include "dosearch/search.h"

namespace dosearch {

/// "%.17g".
std::string format_real(double x);

void write_instance(std::ostream &out, const ProblemInstance &instance);
/// Rejects duplicate costs with TieError; other defects raise ParseError.
ProblemInstance read_instance(std::istream &in);

void write_cdos(std::ostream &out, const ProblemInstance &instance,
                const PartitionSchedule &schedule);

/// One block of N rows per state in `trajectory`, step numbers from 0.
void write_trace(std::ostream &out, const std::vector<StateVector> &trajectory);

void write_result(std::ostream &out, const SearchResult &result);

void write_summary(std::ostream &out, const RobustnessSummary &summary);

void write_factorization(std::ostream &out, const Factorization &factorization);
Factorization read_factorization(std::istream &in);

ProblemInstance load_instance(const std::string &path);
/// Writes through a temporary string; throws Error on I/O failure.
void save_text(const std::string &path, const std::string &text);

}  // namespace dosearch
