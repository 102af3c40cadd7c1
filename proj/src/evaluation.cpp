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

#include "toxtrig/evaluation.hpp"

#include <algorithm>
#include <cstdio>
#include <tuple>

#include "toxtrig/errors.hpp"

namespace toxtrig {

namespace {

using SpanKey = std::tuple<std::string, std::size_t, std::size_t, TriggerType>;

SpanKey key_of(const Mention& m) {
  return SpanKey(m.doc_id, m.start, m.end, m.kind);
}

using Interval = std::pair<std::size_t, std::size_t>;

// Coalesces possibly-overlapping intervals into a sorted disjoint list.
std::vector<Interval> merge_intervals(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end());
  std::vector<Interval> merged;
  for (const Interval& iv : intervals) {
    if (!merged.empty() && iv.first <= merged.back().second)
      merged.back().second = std::max(merged.back().second, iv.second);
    else
      merged.push_back(iv);
  }
  return merged;
}

std::size_t covered(const std::vector<Interval>& merged) {
  std::size_t n = 0;
  for (const Interval& iv : merged) n += iv.second - iv.first;
  return n;
}

std::size_t intersection_size(const std::vector<Interval>& a,
                              const std::vector<Interval>& b) {
  std::size_t n = 0;
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    const std::size_t lo = std::max(a[i].first, b[j].first);
    const std::size_t hi = std::min(a[i].second, b[j].second);
    if (lo < hi) n += hi - lo;
    if (a[i].second < b[j].second)
      ++i;
    else
      ++j;
  }
  return n;
}

}  // namespace

MetricRow make_metric_row(const MatchCounts& counts) {
  MetricRow row;
  row.counts = counts;
  const long long pred_n = counts.tp + counts.fp;
  const long long gold_n = counts.tp + counts.fn;
  if (pred_n == 0 && gold_n == 0) {
    row.precision = row.recall = row.f1 = 1.0;
    return row;
  }
  row.precision =
      pred_n > 0 ? static_cast<double>(counts.tp) / static_cast<double>(pred_n)
                 : 0.0;
  row.recall =
      gold_n > 0 ? static_cast<double>(counts.tp) / static_cast<double>(gold_n)
                 : 0.0;
  row.f1 = row.precision + row.recall > 0.0
               ? 2.0 * row.precision * row.recall /
                     (row.precision + row.recall)
               : 0.0;
  return row;
}

StrictCounts strict_counts(const std::vector<Mention>& gold,
                           const std::vector<Mention>& pred) {
  std::map<SpanKey, long long> unmatched_gold;
  std::array<long long, kTriggerTypeCount> gold_per_type{};
  for (const Mention& g : gold) {
    ++unmatched_gold[key_of(g)];
    ++gold_per_type[type_index(g.kind)];
  }

  StrictCounts out;
  for (const Mention& p : pred) {
    auto it = unmatched_gold.find(key_of(p));
    if (it != unmatched_gold.end() && it->second > 0) {
      --it->second;
      ++out.per_type[type_index(p.kind)].tp;
    } else {
      ++out.per_type[type_index(p.kind)].fp;
    }
  }
  for (TriggerType t : kAllTriggerTypes) {
    MatchCounts& c = out.per_type[type_index(t)];
    c.fn = gold_per_type[type_index(t)] - c.tp;
    out.micro.tp += c.tp;
    out.micro.fp += c.fp;
    out.micro.fn += c.fn;
  }
  return out;
}

ContainmentScores gc_gct(const std::vector<Mention>& gold,
                         const std::vector<Mention>& pred) {
  if (gold.empty()) return ContainmentScores{1.0, 1.0};

  std::map<std::string, std::vector<const Mention*>> pred_by_doc;
  for (const Mention& p : pred) pred_by_doc[p.doc_id].push_back(&p);

  std::size_t contained = 0;
  std::size_t contained_typed = 0;
  for (const Mention& g : gold) {
    bool any = false;
    bool typed = false;
    if (auto it = pred_by_doc.find(g.doc_id); it != pred_by_doc.end()) {
      for (const Mention* p : it->second) {
        if (p->start <= g.start && g.end <= p->end) {
          any = true;
          if (p->kind == g.kind) typed = true;
        }
      }
    }
    if (any) ++contained;
    if (typed) ++contained_typed;
  }
  const double denom = static_cast<double>(gold.size());
  return ContainmentScores{contained / denom, contained_typed / denom};
}

double char_iou(const std::vector<Mention>& gold,
                const std::vector<Mention>& pred) {
  std::map<std::string, std::pair<std::vector<Interval>, std::vector<Interval>>>
      by_doc;
  for (const Mention& g : gold)
    by_doc[g.doc_id].first.emplace_back(g.start, g.end);
  for (const Mention& p : pred)
    by_doc[p.doc_id].second.emplace_back(p.start, p.end);

  std::size_t inter_total = 0;
  std::size_t union_total = 0;
  for (auto& [_, sides] : by_doc) {
    const auto g = merge_intervals(std::move(sides.first));
    const auto p = merge_intervals(std::move(sides.second));
    const std::size_t inter = intersection_size(g, p);
    inter_total += inter;
    union_total += covered(g) + covered(p) - inter;
  }
  if (union_total == 0) return 1.0;
  return static_cast<double>(inter_total) / static_cast<double>(union_total);
}

EvalReport evaluate_lists(const std::vector<Mention>& gold,
                          const std::vector<Mention>& pred) {
  EvalReport report;
  const StrictCounts counts = strict_counts(gold, pred);
  for (TriggerType t : kAllTriggerTypes)
    report.per_type[type_index(t)] =
        make_metric_row(counts.per_type[type_index(t)]);
  report.micro = make_metric_row(counts.micro);
  const ContainmentScores cs = gc_gct(gold, pred);
  report.gc = cs.gc;
  report.gct = cs.gct;
  report.char_iou = char_iou(gold, pred);
  return report;
}

EvalReport evaluate(
    const Corpus& gold_corpus,
    const std::map<std::string, std::vector<Mention>>& predictions) {
  std::vector<Mention> gold;
  for (const Document& doc : gold_corpus.documents)
    if (auto it = gold_corpus.gold.find(doc.id); it != gold_corpus.gold.end())
      gold.insert(gold.end(), it->second.begin(), it->second.end());

  std::vector<Mention> pred;
  for (const auto& [doc_id, mentions] : predictions) {
    if (gold_corpus.find_document(doc_id) == nullptr)
      throw Error("predictions name unknown document '" + doc_id + "'");
    pred.insert(pred.end(), mentions.begin(), mentions.end());
  }
  return evaluate_lists(gold, pred);
}

std::string EvalReport::to_table() const {
  char buf[160];
  std::string out;
  std::snprintf(buf, sizeof(buf), "%-10s %9s %9s %9s %7s %7s %7s\n", "Type",
                "Precision", "Recall", "F1", "TP", "FP", "FN");
  out += buf;
  auto row = [&](const std::string& label, const MetricRow& r) {
    std::snprintf(buf, sizeof(buf), "%-10s %9.4f %9.4f %9.4f %7lld %7lld %7lld\n",
                  label.c_str(), r.precision, r.recall, r.f1, r.counts.tp,
                  r.counts.fp, r.counts.fn);
    out += buf;
  };
  for (TriggerType t : kAllTriggerTypes)
    row(std::string(to_tag(t)), per_type[type_index(t)]);
  row("micro", micro);
  std::snprintf(buf, sizeof(buf), "%-10s %9.4f\n%-10s %9.4f\n%-10s %9.4f\n",
                "GC", gc, "GCT", gct, "IoU-char", char_iou);
  out += buf;
  return out;
}

std::string EvalReport::to_metrics_text() const {
  char buf[128];
  std::string out;
  auto block = [&](const std::string& label, const MetricRow& r) {
    std::snprintf(buf, sizeof(buf),
                  "tp\t%s\t%lld\nfp\t%s\t%lld\nfn\t%s\t%lld\n", label.c_str(),
                  r.counts.tp, label.c_str(), r.counts.fp, label.c_str(),
                  r.counts.fn);
    out += buf;
    std::snprintf(buf, sizeof(buf),
                  "precision\t%s\t%.6f\nrecall\t%s\t%.6f\nf1\t%s\t%.6f\n",
                  label.c_str(), r.precision, label.c_str(), r.recall,
                  label.c_str(), r.f1);
    out += buf;
  };
  for (TriggerType t : kAllTriggerTypes)
    block(std::string(to_tag(t)), per_type[type_index(t)]);
  block("micro", micro);
  std::snprintf(buf, sizeof(buf),
                "gc\tmicro\t%.6f\ngct\tmicro\t%.6f\nchar_iou\tmicro\t%.6f\n",
                gc, gct, char_iou);
  out += buf;
  return out;
}

}  // namespace toxtrig
