// Copyright 2026 The toxtrig Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef TOXTRIG_EVALUATION_HPP_
#define TOXTRIG_EVALUATION_HPP_

#include <array>
#include <map>
#include <string>
#include <vector>

#include "toxtrig/corpus.hpp"
#include "toxtrig/types.hpp"

namespace toxtrig {

struct MatchCounts {
  long long tp = 0;
  long long fp = 0;
  long long fn = 0;

  bool operator==(const MatchCounts&) const = default;
};

struct MetricRow {
  MatchCounts counts;
  double precision = 0.0;
  double recall = 0.0;
  double f1 = 0.0;
};

// Precision/recall conventions: when there are neither predictions nor gold,
// all three ratios are 1; a missing side alone scores 0; otherwise the usual
// tp/(tp+fp), tp/(tp+fn) and their harmonic mean.
MetricRow make_metric_row(const MatchCounts& counts);

struct StrictCounts {
  std::array<MatchCounts, kTriggerTypeCount> per_type;
  MatchCounts micro;
};

// Exact (doc, start, end, type) matching, one-to-one: a prediction matches at
// most one identical gold mention and vice versa. Inputs may span many
// documents; doc_id is part of the match key.
StrictCounts strict_counts(const std::vector<Mention>& gold,
                           const std::vector<Mention>& pred);

struct ContainmentScores {
  double gc = 1.0;   // gold contained in some prediction
  double gct = 1.0;  // ... with the correct type
};

// Fractions of gold mentions weakly contained (p.start <= g.start and
// g.end <= p.end, same document) in some prediction, micro over the corpus.
// Empty gold scores 1 on both.
ContainmentScores gc_gct(const std::vector<Mention>& gold,
                         const std::vector<Mention>& pred);

// Character-level intersection over union: per document, the sets of
// character indices covered by gold and by predictions; corpus score is
// summed intersections over summed unions. Overlapping spans within a side
// are unioned first. Nothing covered on either side anywhere scores 1.
double char_iou(const std::vector<Mention>& gold,
                const std::vector<Mention>& pred);

struct EvalReport {
  std::array<MetricRow, kTriggerTypeCount> per_type;
  MetricRow micro;
  double gc = 1.0;
  double gct = 1.0;
  double char_iou = 1.0;

  // Columns Precision / Recall / F1 per type plus micro, then the
  // containment and IoU rows.
  std::string to_table() const;
  // One `metric<TAB>type<TAB>value` line per value, fixed order, %.6f ratios.
  std::string to_metrics_text() const;
};

// All metrics over flat mention lists (doc_id distinguishes documents).
EvalReport evaluate_lists(const std::vector<Mention>& gold,
                          const std::vector<Mention>& pred);

// Scores predictions against a gold corpus. Prediction keys must name
// documents of the corpus; unknown ids raise Error.
EvalReport evaluate(const Corpus& gold_corpus,
                    const std::map<std::string, std::vector<Mention>>& predictions);

}  // namespace toxtrig

#endif  // TOXTRIG_EVALUATION_HPP_
