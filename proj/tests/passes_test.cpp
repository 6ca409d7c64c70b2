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


#include "monoclique/passes.hpp"

#include <gtest/gtest.h>

#include "monoclique/clique.hpp"
#include "monoclique/netlist.hpp"
#include "monoclique/verify.hpp"
#include "oracles.hpp"

namespace monoclique {
namespace {

Circuit net(const char* text) { return parse_netlist(text); }

bool same_function(const Circuit& a, const Circuit& b) {
  if (a.num_vars() != b.num_vars()) return false;
  bool same = true;
  testing::for_each_assignment(a.num_vars(), [&](const Assignment& x) {
    if (testing::eval_recursive(a, x) != testing::eval_recursive(b, x)) same = false;
  });
  return same;
}

TEST(StandardizeTest, DeMorganOverAnd) {
  const Circuit c = net("inputs 2\nn0 = IN 0\nn1 = IN 1\nn2 = AND n0 n1\nn3 = NOT n2\noutput n3\n");
  const Circuit st = standardize(c);
  EXPECT_EQ(serialize_netlist(st),
            "inputs 2\nn0 = NEG 0\nn1 = NEG 1\nn2 = OR n0 n1\noutput n2\n");
  EXPECT_EQ(size(c), 2u);
  EXPECT_EQ(size(st), 1u);
}

TEST(StandardizeTest, DoubleNegationVanishes) {
  const Circuit c = net("inputs 1\nn0 = IN 0\nn1 = NOT n0\nn2 = NOT n1\noutput n2\n");
  const Circuit st = standardize(c);
  EXPECT_EQ(serialize_netlist(st), "inputs 1\nn0 = IN 0\noutput n0\n");
  EXPECT_EQ(size(st), 0u);
}

TEST(StandardizeTest, StandardInputIsAFixpoint) {
  const Circuit c = build_shannon_circuit(CliqueSpec(4, 3), std::vector<VarIndex>{0});
  const Circuit st = standardize(c);
  EXPECT_TRUE(same_function(c, st));
  EXPECT_LE(size(st), size(c));
}

TEST(StandardizeTest, NegatedRailOfConstantsAndNegInputs) {
  const Circuit c =
      net("inputs 1\nn0 = NEG 0\nn1 = CONST 0\nn2 = OR n0 n1\nn3 = NOT n2\noutput n3\n");
  const Circuit st = standardize(c);
  EXPECT_TRUE(is_standard(st));
  EXPECT_TRUE(same_function(c, st));
}

TEST(StandardizeProperty, SoundStandardAndAtMostDoubled) {
  for (const Circuit& c : testing::random_corpus(500, 10, 50, 31)) {
    const Circuit st = standardize(c);
    ASSERT_TRUE(is_standard(st));
    ASSERT_LE(size(st), 2 * size(c));
    ASSERT_TRUE(same_function(c, st)) << serialize_netlist(c);
  }
}

TEST(ConstantFoldTest, Identities) {
  EXPECT_EQ(serialize_netlist(constant_fold(
                net("inputs 1\nn0 = IN 0\nn1 = CONST 1\nn2 = AND n0 n1\noutput n2\n"))),
            "inputs 1\nn0 = IN 0\noutput n0\n");
  EXPECT_EQ(serialize_netlist(constant_fold(net(
                "inputs 2\nn0 = CONST 1\nn1 = IN 0\nn2 = IN 1\nn3 = AND n1 n2\nn4 = OR n0 n3\n"
                "output n4\n"))),
            "inputs 2\nn0 = CONST 1\noutput n0\n");
  EXPECT_EQ(serialize_netlist(constant_fold(
                net("inputs 1\nn0 = CONST 0\nn1 = NOT n0\nn2 = IN 0\nn3 = AND n2 n1\noutput n3\n"))),
            "inputs 1\nn0 = IN 0\noutput n0\n");
  EXPECT_EQ(serialize_netlist(constant_fold(
                net("inputs 1\nn0 = IN 0\nn1 = CONST 0\nn2 = AND n0 n1\noutput n2\n"))),
            "inputs 1\nn0 = CONST 0\noutput n0\n");
}

TEST(ConstantFoldTest, ContradictionIsNotFolded) {
  const Circuit c = net("inputs 1\nn0 = NEG 0\nn1 = IN 0\nn2 = AND n0 n1\noutput n2\n");
  EXPECT_EQ(constant_fold(c), c);
}

TEST(ConstantFoldProperty, NoConstChildAndSizeNeverGrows) {
  for (const Circuit& c : testing::random_corpus(500, 8, 40, 32)) {
    const Circuit f = constant_fold(c);
    ASSERT_LE(size(f), size(c));
    ASSERT_TRUE(same_function(c, f));
    if (f.node_count() == 1) continue;
    for (const Node& n : f.nodes()) {
      if (!n.is_gate()) continue;
      ASSERT_NE(f.node(n.a).op, Op::Const);
      if (n.arity() == 2) ASSERT_NE(f.node(n.b).op, Op::Const);
    }
  }
}

TEST(SubstituteLiteralTest, ReplacesAndFolds) {
  const Circuit c = net(
      "inputs 3\nn0 = NEG 0\nn1 = IN 1\nn2 = AND n0 n1\nn3 = IN 0\nn4 = IN 2\nn5 = AND n3 n4\n"
      "n6 = OR n2 n5\noutput n6\n");
  EXPECT_EQ(serialize_netlist(substitute_literal(c, 0)),
            "inputs 3\nn0 = IN 1\nn1 = IN 0\nn2 = IN 2\nn3 = AND n1 n2\nn4 = OR n0 n3\n"
            "output n4\n");
}

TEST(SubstituteLiteralTest, NoOccurrenceLeavesCircuitUnchanged) {
  const Circuit c = build_shannon_circuit(CliqueSpec(4, 3), std::vector<VarIndex>{2});
  EXPECT_EQ(substitute_literal(c, 0), c);
}

TEST(SubstituteLiteralTest, PonCircuitLosesItsContradiction) {
  const CliqueSpec spec(4, 3);
  const Circuit monotone = build_monotone_dnf_circuit(spec);
  const Circuit after = substitute_literal(build_pon_circuit(spec), 0);
  // Or(IN 0, M): one OR on top of the monotone circuit.
  EXPECT_EQ(size(after), size(monotone) + 1);
  const Node& top = after.node(after.output());
  ASSERT_EQ(top.op, Op::Or);
  EXPECT_EQ(after.node(top.a), Node::input(0));
  EXPECT_TRUE(eval(after, Assignment::from_string("100000")));
  EXPECT_FALSE(clique_oracle(spec, Assignment::from_string("100000")));
}

TEST(SubstituteLiteralTest, RejectsNonStandardInput) {
  const Circuit c = net("inputs 1\nn0 = IN 0\nn1 = NOT n0\noutput n1\n");
  EXPECT_THROW(substitute_literal(c, 0), CircuitError);
  EXPECT_THROW(monotonize_circuit_level(c), CircuitError);
}

TEST(SubstituteLiteralProperty, DominanceAndAgreementWhereLiteralWasOne) {
  for (const Circuit& raw : testing::random_corpus(300, 8, 40, 33)) {
    const Circuit c = standardize(raw);
    for (VarIndex v = 0; v < c.num_vars(); ++v) {
      const Circuit sub = substitute_literal(c, v);
      ASSERT_LE(size(sub), size(c));
      testing::for_each_assignment(c.num_vars(), [&](const Assignment& a) {
        const bool before = testing::eval_recursive(c, a);
        const bool after = testing::eval_recursive(sub, a);
        ASSERT_GE(after, before);
        if (!a[v]) ASSERT_EQ(after, before);
      });
    }
  }
}

TEST(MonotonizeCircuitTest, Examples) {
  const Circuit monotone = build_monotone_dnf_circuit(CliqueSpec(4, 3));
  EXPECT_EQ(monotonize_circuit_level(monotone), monotone);

  EXPECT_EQ(serialize_netlist(monotonize_circuit_level(net("inputs 1\nn0 = NEG 0\noutput n0\n"))),
            "inputs 1\nn0 = CONST 1\noutput n0\n");

  const CliqueSpec spec(4, 3);
  const Circuit shannon = build_shannon_circuit(spec, std::vector<VarIndex>{0});
  const Circuit mono = monotonize_circuit_level(shannon);
  EXPECT_TRUE(is_syntactically_monotone(mono));
  EXPECT_LE(size(mono), size(shannon));
  testing::for_each_assignment(spec.num_vars(), [&](const Assignment& a) {
    ASSERT_EQ(eval(mono, a), testing::has_clique_bitmask(4, 3, a));
  });
}

TEST(MonotonizeCircuitProperty, AlwaysMonotoneNeverLarger) {
  for (const Circuit& raw : testing::random_corpus(300, 8, 40, 34)) {
    const Circuit c = standardize(raw);
    const Circuit m = monotonize_circuit_level(c);
    ASSERT_TRUE(is_syntactically_monotone(m));
    ASSERT_LE(size(m), size(c));
  }
}

}  // namespace
}  // namespace monoclique
