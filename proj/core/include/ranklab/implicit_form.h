// Copyright 2026 The RankLab Authors.
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

#ifndef RANKLAB_IMPLICIT_FORM_H_
#define RANKLAB_IMPLICIT_FORM_H_

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "ranklab/procedures.h"
#include "ranklab/profile.h"

namespace ranklab {

// (a_ij^p, s_j, -s_i): one comparison of alternative i seen as a point whose
// coordinates all push i's own score up.
struct ComparisonTriple {
  double outcome = 0.0;
  double opponent_score = 0.0;
  double neg_own_score = 0.0;

  friend auto operator<=>(const ComparisonTriple&, const ComparisonTriple&) = default;
};

// A multiset of m(n-1) triples, kept sorted lexicographically so that equal
// multisets compare equal.
using TripleMultiset = std::vector<ComparisonTriple>;

TripleMultiset ComparisonTriples(const Profile& profile, const ScoreVector& scores, int alternative);
std::vector<double> FlattenTriples(const TripleMultiset& triples);
// Groups consecutive coordinates into triples, preserving their order.
// Errors: kDimensionMismatch when the length is not a multiple of 3.
TripleMultiset GroupTriples(std::span<const double> flat);
void Canonicalize(TripleMultiset& triples);

// Whether some pairing of the two multisets puts every triple of `lower`
// componentwise at or below its partner in `upper`.
bool TriplesDominated(const TripleMultiset& lower, const TripleMultiset& upper);

struct TripleSample {
  TripleMultiset triples;
  int profile = 0;
  int alternative = 0;
};

// Triples of every alternative of every profile under the procedure.
// Errors: kDimensionMismatch unless all profiles share n and m.
std::vector<TripleSample> CollectComparisonTriples(const ProcedureHandle& procedure,
                                                   std::span<const Profile> profiles);

struct TriplesParetianReport {
  bool paretian = true;
  int collected = 0;
  int distinct = 0;
  // first lies below second under some pairing of triples, and they differ.
  std::optional<std::pair<TripleSample, TripleSample>> offending;
};

// Checks that the flattened triple vectors, taken in every triple order,
// form a Paretian set. Exact duplicates are merged first.
TriplesParetianReport CheckTriplesParetian(const ProcedureHandle& procedure, std::span<const Profile> profiles);

// Strictly increasing extension of bounded values given on multisets of
// triples, evaluated on R^{3T}. It equals the coordinate-wise extension over
// the set of all triple orders of the given multisets, so its value depends
// only on the multiset of triples in its argument.
class MultisetExtension {
 public:
  // `points` must be distinct multisets of equal size whose closure under
  // triple reordering is Paretian. Errors: kDimensionMismatch,
  // kInvalidArgument, kNotParetian.
  static MultisetExtension Build(std::vector<TripleMultiset> points, std::vector<double> values);

  int triples() const { return triples_; }
  int dimension() const { return 3 * triples_; }
  int size() const { return static_cast<int>(cube_.size()); }

  // Errors: kDimensionMismatch, kInvalidArgument for non-finite input.
  double Evaluate(std::span<const double> x) const;

 private:
  MultisetExtension() = default;

  double DownDistance(const TripleMultiset& y, int slot, int component, bool in_down) const;
  double UpDistance(const TripleMultiset& y, int slot, int component, bool in_up) const;

  int triples_ = 0;
  std::vector<TripleMultiset> cube_;
  std::vector<double> values_;
  double f_min_ = 0.0;
  double f_max_ = 0.0;
};

struct WitnessOptions {
  int probes = 1000;
  std::uint64_t seed = 0;
};

struct ImplicitFormWitnessReport {
  int points = 0;
  // Largest |g| over the collected triple vectors; zero by construction.
  double max_abs_on_data = 0.0;
  int probes = 0;
  // g(x + delta e_c) <= g(x) for a probe x, axis c, delta in {1e-6, 1e-2, 1}.
  int monotone_failures = 0;
  // Raising one outcome of a collected vector did not make g positive.
  int raised_outcome_failures = 0;
  // Reordering the triples of a probe changed g.
  int permutation_failures = 0;

  bool passed() const {
    return max_abs_on_data == 0.0 && monotone_failures == 0 && raised_outcome_failures == 0 &&
           permutation_failures == 0;
  }
};

// Builds g as the zero-valued extension over the procedure's comparison
// triples and checks it is an implicit form: zero on the data, strictly
// increasing on probes, and a function of the triple multiset.
// Errors: kNotParetian when the procedure's triples are not Paretian.
ImplicitFormWitnessReport RunImplicitFormWitness(const ProcedureHandle& procedure,
                                                 std::span<const Profile> profiles,
                                                 const WitnessOptions& options = {});

}  // namespace ranklab

#endif  // RANKLAB_IMPLICIT_FORM_H_
