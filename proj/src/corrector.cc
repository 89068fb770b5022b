// Copyright 2026 The Veridict Authors.
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

#include "veridict/corrector.h"

#include <algorithm>
#include <map>
#include <set>

namespace veridict::corrector {

using recognizers::MentionKind;

namespace {

std::vector<EntityMention> Distinct(const std::vector<EntityMention> &mentions) {
  std::vector<EntityMention> out;
  std::set<std::string> seen;
  for (const auto &m : mentions) {
    if (seen.insert(m.Identity()).second) out.push_back(m);
  }
  return out;
}

struct Rewrite {
  size_t start;
  size_t end;
  std::string text;
  size_t entry;
};

// Text a number occurrence becomes: its own currency marker and spacing
// around the numeric part of the replacement.
std::string NumberRewrite(const EntityMention &occurrence, const EntityMention &replacement) {
  auto [ob, oe] = recognizers::NumericCore(occurrence.surface);
  auto [rb, re] = recognizers::NumericCore(replacement.surface);
  return occurrence.surface.substr(0, ob) + replacement.surface.substr(rb, re - rb) +
         occurrence.surface.substr(oe);
}

// One correction pass over `summary`, appending to `ledger`.
std::string CorrectOnce(std::string_view document, std::string_view summary,
                        const recognizers::Recognizer &recognizer,
                        const embedding::Embedder &embedder, ReplacementLedger *ledger) {
  std::vector<EntityMention> summary_mentions = recognizer.ExtractAll(summary);
  EntitySets sets = ComputeEntitySets(document, summary, recognizer);
  if (sets.v_r.empty()) return std::string(summary);

  std::vector<std::string> texts;
  for (const auto &m : sets.v_r) texts.push_back(m.canonical);
  for (const auto &m : sets.v_j) texts.push_back(m.canonical);
  std::vector<embedding::Vector> vectors =
      sets.v_j.empty() ? std::vector<embedding::Vector>{} : embedder.Embed(texts);

  std::vector<Rewrite> rewrites;
  for (size_t r = 0; r < sets.v_r.size(); ++r) {
    const EntityMention &orig = sets.v_r[r];
    int best = -1;
    double best_sim = 0.0;
    for (size_t j = 0; j < sets.v_j.size(); ++j) {
      if (orig.kind == MentionKind::kNumber && sets.v_j[j].kind != MentionKind::kNumber) {
        continue;
      }
      double sim = embedding::Cosine(vectors[r], vectors[sets.v_r.size() + j]);
      if (best < 0 || sim > best_sim) {
        best = static_cast<int>(j);
        best_sim = sim;
      }
    }
    if (best < 0) {
      ledger->warnings.push_back(
          {orig, orig.kind == MentionKind::kNumber ? "document has no numbers"
                                                   : "document has no entities"});
      continue;
    }
    const EntityMention &rep = sets.v_j[best];
    size_t entry = ledger->entries.size();
    ledger->entries.push_back({orig, rep, best_sim, {}});
    std::string identity = orig.Identity();
    for (const auto &occ : summary_mentions) {
      if (occ.Identity() != identity) continue;
      std::string text = orig.kind == MentionKind::kNumber ? NumberRewrite(occ, rep)
                                                           : rep.surface;
      rewrites.push_back({occ.start, occ.end, std::move(text), entry});
    }
  }

  // Drop rewrites that overlap an earlier one, then apply right to left.
  std::sort(rewrites.begin(), rewrites.end(),
            [](const Rewrite &a, const Rewrite &b) { return a.start < b.start; });
  std::vector<Rewrite> kept;
  for (auto &rw : rewrites) {
    if (!kept.empty() && rw.start < kept.back().end) continue;
    kept.push_back(std::move(rw));
  }
  std::string out(summary);
  for (auto it = kept.rbegin(); it != kept.rend(); ++it) {
    out.replace(it->start, it->end - it->start, it->text);
  }
  for (const auto &rw : kept) {
    ledger->entries[rw.entry].spans_rewritten.emplace_back(rw.start, rw.end);
  }
  return out;
}

nlohmann::ordered_json MentionJson(const EntityMention &m) {
  nlohmann::ordered_json j;
  j["surface"] = m.surface;
  j["kind"] = recognizers::MentionKindName(m.kind);
  j["canonical"] = m.canonical;
  j["start"] = m.start;
  j["end"] = m.end;
  return j;
}

}  // namespace

EntitySets ComputeEntitySets(std::string_view document, std::string_view summary,
                             const recognizers::Recognizer &recognizer) {
  EntitySets sets;
  sets.v_j = Distinct(recognizer.ExtractAll(document));
  sets.v_s = Distinct(recognizer.ExtractAll(summary));
  std::set<std::string> doc_ids;
  for (const auto &m : sets.v_j) doc_ids.insert(m.Identity());
  for (const auto &m : sets.v_s) {
    if (!doc_ids.count(m.Identity())) sets.v_r.push_back(m);
  }
  return sets;
}

Correction CorrectSummary(std::string_view document, std::string_view summary,
                          const recognizers::Recognizer &recognizer,
                          const embedding::Embedder &embedder) {
  Correction result;
  std::string current(summary);
  // A rewrite can fuse with neighbouring capitalized words into a new
  // mention; later passes repair those. Spans of later passes refer to the
  // text produced by the previous pass.
  constexpr int kMaxPasses = 3;
  for (int pass = 0; pass < kMaxPasses; ++pass) {
    ReplacementLedger step;
    std::string next = CorrectOnce(document, current, recognizer, embedder, &step);
    bool changed = next != current;
    if (pass == 0 || changed) {
      for (auto &e : step.entries) result.ledger.entries.push_back(std::move(e));
    }
    for (auto &w : step.warnings) {
      std::string id = w.original.Identity();
      bool known = std::any_of(result.ledger.warnings.begin(), result.ledger.warnings.end(),
                               [&](const Unrepairable &u) { return u.original.Identity() == id; });
      if (!known) result.ledger.warnings.push_back(std::move(w));
    }
    current = std::move(next);
    if (!changed) break;
  }
  result.text = std::move(current);
  return result;
}

nlohmann::ordered_json LedgerToJson(const ReplacementLedger &ledger) {
  nlohmann::ordered_json j;
  j["entries"] = nlohmann::ordered_json::array();
  for (const auto &e : ledger.entries) {
    nlohmann::ordered_json entry;
    entry["original"] = MentionJson(e.original);
    entry["replacement"] = MentionJson(e.replacement);
    entry["similarity"] = e.similarity;
    entry["spans_rewritten"] = nlohmann::ordered_json::array();
    for (auto [b, en] : e.spans_rewritten) entry["spans_rewritten"].push_back({b, en});
    j["entries"].push_back(std::move(entry));
  }
  j["unrepairable"] = nlohmann::ordered_json::array();
  for (const auto &w : ledger.warnings) {
    nlohmann::ordered_json entry;
    entry["original"] = MentionJson(w.original);
    entry["reason"] = w.reason;
    j["unrepairable"].push_back(std::move(entry));
  }
  return j;
}

}  // namespace veridict::corrector
