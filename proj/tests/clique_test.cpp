/*
 * Copyright 2026 The monoclique Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 *
 * SPDX-License-Identifier: Apache-2.0
 */


#include "monoclique/clique.hpp"

#include <gtest/gtest.h>

#include "monoclique/netlist.hpp"
#include "monoclique/verify.hpp"
#include "oracles.hpp"

namespace monoclique {
namespace {

void expect_oracle_equivalent(const Circuit& c, std::size_t m, std::size_t s) {
  const CliqueSpec spec(m, s);
  ASSERT_EQ(c.num_vars(), spec.num_vars());
  testing::for_each_assignment(spec.num_vars(), [&](const Assignment& a) {
    ASSERT_EQ(eval(c, a), testing::has_clique_bitmask(m, s, a)) << a.to_string();
  });
}

TEST(CliqueSpecTest, Bounds) {
  EXPECT_THROW(CliqueSpec(3, 0), CliqueError);
  EXPECT_THROW(CliqueSpec(3, 4), CliqueError);
  EXPECT_EQ(CliqueSpec(4, 3).num_vars(), 6u);
  EXPECT_EQ(CliqueSpec(1, 1).num_vars(), 0u);
}

TEST(EdgeIndexingTest, LexicographicOrderForFourVertices) {
  const EdgeIndexing idx(4);
  const std::vector<Edge> expected = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  for (VarIndex j = 0; j < 6; ++j) EXPECT_EQ(idx.edge(j), expected[j]);
  EXPECT_EQ(idx.index(2, 1), 3u);
  EXPECT_THROW(idx.index(1, 1), CliqueError);
  EXPECT_THROW(idx.edge(6), CliqueError);
}

TEST(EdgeIndexingTest, RoundTripUpToTwelveVertices) {
  for (std::size_t m = 2; m <= 12; ++m) {
    const EdgeIndexing idx(m);
    for (VarIndex j = 0; j < idx.num_vars(); ++j) {
      const Edge e = idx.edge(j);
      ASSERT_LT(e.u, e.v);
      ASSERT_EQ(idx.index(e.u, e.v), j);
      ASSERT_EQ(testing::edge_by_counting(m, e.u, e.v), j);
    }
  }
}

TEST(CliqueOracleTest, Examples) {
  EXPECT_TRUE(clique_oracle(CliqueSpec(3, 3), Assignment::from_string("111")));
  EXPECT_FALSE(clique_oracle(CliqueSpec(3, 3), Assignment::from_string("110")));
  EXPECT_TRUE(clique_oracle(CliqueSpec(4, 3), Assignment::from_string("110100")));
  for (std::size_t m = 1; m <= 5; ++m) {
    testing::for_each_assignment(CliqueSpec(m, 1).num_vars(), [&](const Assignment& a) {
      ASSERT_TRUE(clique_oracle(CliqueSpec(m, 1), a));
    });
  }
  EXPECT_THROW(clique_oracle(CliqueSpec(4, 3), Assignment::from_string("111")),
               std::invalid_argument);
}

TEST(CliqueOracleTest, AgreesWithBitmaskEnumeration) {
  for (std::size_t m = 2; m <= 6; ++m) {
    for (std::size_t s = 1; s <= m; ++s) {
      const CliqueSpec spec(m, s);
      testing::for_each_assignment(spec.num_vars(), [&](const Assignment& a) {
        ASSERT_EQ(clique_oracle(spec, a), testing::has_clique_bitmask(m, s, a));
      });
    }
  }
}

TEST(CliqueOracleTest, DegenerateSizes) {
  for (std::size_t m = 2; m <= 5; ++m) {
    const CliqueSpec full(m, m);
    const CliqueSpec edge(m, 2);
    testing::for_each_assignment(full.num_vars(), [&](const Assignment& a) {
      bool all = true;
      bool any = false;
      for (std::size_t j = 0; j < a.size(); ++j) {
        all = all && a[j];
        any = any || a[j];
      }
      ASSERT_EQ(clique_oracle(full, a), all);
      ASSERT_EQ(clique_oracle(edge, a), any);
    });
  }
}

TEST(CliqueOracleTest, SingleFlipMonotone) {
  for (std::size_t m = 3; m <= 6; ++m) {
    for (std::size_t s = 2; s <= m; ++s) {
      const auto r = is_monotone_semantic(Evaluatable::oracle(CliqueSpec(m, s)));
      EXPECT_TRUE(r.monotone) << m << "," << s;
    }
  }
}

TEST(MonotoneCircuitTest, Shapes) {
  const Circuit c33 = build_monotone_dnf_circuit(CliqueSpec(3, 3));
  EXPECT_EQ(size(c33), 2u);
  EXPECT_EQ(serialize_netlist(c33),
            "inputs 3\nn0 = IN 0\nn1 = IN 1\nn2 = IN 2\nn3 = AND n0 n1\nn4 = AND n3 n2\n"
            "output n4\n");

  const Circuit c43 = build_monotone_dnf_circuit(CliqueSpec(4, 3));
  EXPECT_EQ(size(c43), 11u);
  EXPECT_TRUE(is_syntactically_monotone(c43));

  EXPECT_EQ(clique_monomials(CliqueSpec(5, 3)).size(), 10u);
  EXPECT_EQ(binomial(5, 3), 10u);
  EXPECT_EQ(binomial(8, 3), 56u);
  EXPECT_EQ(binomial(3, 5), 0u);
}

TEST(MonotoneCircuitTest, OracleEquivalentUpToFifteenVariables) {
  for (std::size_t m = 1; m <= 6; ++m)
    for (std::size_t s = 1; s <= m; ++s)
      expect_oracle_equivalent(build_monotone_dnf_circuit(CliqueSpec(m, s)), m, s);
}

TEST(MonotoneCircuitTest, GateBudget) {
  EXPECT_THROW(build_monotone_dnf_circuit(CliqueSpec(6, 3), 10), CliqueError);
}

TEST(ShannonCircuitTest, Examples) {
  const CliqueSpec spec(4, 3);
  const Circuit one = build_shannon_circuit(spec, std::vector<VarIndex>{0});
  EXPECT_TRUE(is_standard(one));
  EXPECT_TRUE(has_negated_input(one, 0));
  std::size_t negs = 0;
  for (const Node& n : one.nodes()) negs += n.op == Op::NegInput;
  EXPECT_EQ(negs, 1u);
  expect_oracle_equivalent(one, 4, 3);

  EXPECT_EQ(build_shannon_circuit(spec, std::vector<VarIndex>{}), build_monotone_dnf_circuit(spec));

  const Circuit two = build_shannon_circuit(spec, std::vector<VarIndex>{0, 1});
  EXPECT_TRUE(has_negated_input(two, 0));
  EXPECT_TRUE(has_negated_input(two, 1));
  expect_oracle_equivalent(two, 4, 3);
}

TEST(ShannonCircuitTest, InvalidPivots) {
  const CliqueSpec spec(4, 3);
  EXPECT_THROW(build_shannon_circuit(spec, std::vector<VarIndex>{6}), CliqueError);
  EXPECT_THROW(build_shannon_circuit(spec, std::vector<VarIndex>{1, 1}), CliqueError);
}

TEST(ShannonCircuitTest, OracleEquivalentAcrossSpecsAndPivots) {
  const std::vector<std::vector<VarIndex>> pivot_sets = {{0}, {2}, {0, 1}, {1, 0}, {0, 2, 5}};
  for (std::size_t m = 3; m <= 5; ++m) {
    for (std::size_t s = 2; s <= m; ++s) {
      for (const auto& pivots : pivot_sets) {
        if (*std::max_element(pivots.begin(), pivots.end()) >= CliqueSpec(m, s).num_vars()) continue;
        const Circuit c = build_shannon_circuit(CliqueSpec(m, s), pivots);
        EXPECT_TRUE(is_standard(c));
        for (VarIndex p : pivots) EXPECT_TRUE(has_negated_input(c, p));
        expect_oracle_equivalent(c, m, s);
      }
    }
  }
}

TEST(PonCircuitTest, EquivalentButHidesAContradiction) {
  const CliqueSpec spec(4, 3);
  const Circuit pon = build_pon_circuit(spec);
  EXPECT_TRUE(is_standard(pon));
  EXPECT_FALSE(is_syntactically_monotone(pon));
  expect_oracle_equivalent(pon, 4, 3);
  EXPECT_EQ(to_dnf(pon), to_dnf(build_monotone_dnf_circuit(spec)));
  for (std::size_t m = 3; m <= 6; ++m)
    for (std::size_t s = 2; s <= m; ++s) expect_oracle_equivalent(build_pon_circuit(CliqueSpec(m, s)), m, s);
}

}  // namespace
}  // namespace monoclique
