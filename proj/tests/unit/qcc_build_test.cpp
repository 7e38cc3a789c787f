// Copyright 2026 The qccwb Authors
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

#include <set>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qcc/qcc_code.hpp"

namespace qcc::code {
namespace {

using gf::Poly;
using gf::PolyMatrix;

cc::ConvCode parent57(gf::Symbol p = 2) {
    return cc::ConvCode(PolyMatrix(p, 1, 2, {Poly(p, {1, 0, 1}), Poly(p, {1, 1, 1})}));
}

cc::ConvCode repetition3() {
    return cc::ConvCode(PolyMatrix(2, 1, 3, {Poly(2, {1}), Poly(2, {1}), Poly(2, {1})}));
}

oracle::Gf2Span span_of(const pauli::StabilizerWindow &stab) {
    oracle::Gf2Span s;
    for (const auto &g : stab.generators()) s.insert(oracle::symplectic(g.to_string()));
    return s;
}

// a and b differ by an element of the stabilizer group.
bool equivalent(const oracle::Gf2Span &span, const std::string &a, const std::string &b) {
    auto va = oracle::symplectic(a), vb = oracle::symplectic(b);
    for (std::size_t i = 0; i < va.size(); ++i) va[i] ^= vb[i];
    return span.contains(va);
}

TEST(ClassicalStabilizer, RepetitionBlockCode) {
    auto stab = classical_stabilizer(repetition3(), 1);
    ASSERT_EQ(stab.length(), 3);
    oracle::Gf2Span span = span_of(stab);
    EXPECT_EQ(span.dimension(), 2u);
    EXPECT_TRUE(span.contains(oracle::symplectic("ZZI")));
    EXPECT_TRUE(span.contains(oracle::symplectic("ZIZ")));
    ASSERT_EQ(stab.logical_x().size(), 1u);
    EXPECT_EQ(stab.logical_x()[0].to_string(), "XXX");
    EXPECT_TRUE(equivalent(span, stab.logical_z()[0].to_string(), "ZZZ"));
}

TEST(ClassicalStabilizer, FirstLogicalReencodesUnitInput) {
    auto stab = classical_stabilizer(parent57(), 4);
    EXPECT_EQ(stab.logical_x()[0].to_string().substr(0, 8), "XXIXXXII");
}

TEST(FourierDual, SwapsTypes) {
    auto stab = StabilizerWindow(2, 3, {PauliWindow::from_string("ZZI"), PauliWindow::from_string("ZIZ")}, {}, {});
    auto dual = fourier_dual(stab);
    EXPECT_EQ(dual.generators()[0].to_string(), "XXI");
    EXPECT_EQ(dual.generators()[1].to_string(), "XIX");
    auto twice = fourier_dual(dual);
    EXPECT_EQ(twice.generators()[0].to_string(), "ZZI");

    StabilizerWindow empty(2, 1, {}, {}, {});
    EXPECT_TRUE(fourier_dual(empty).generators().empty());

    auto q = PauliWindow::from_string("X Z2 X2Z", 3);
    auto qq = fourier_dual(fourier_dual(q));
    EXPECT_EQ(qq, inverse(q));
}

class Eq1Code : public ::testing::Test {
   protected:
    static void SetUpTestSuite() { code_ = new QccCode(build_qcc(parent57(), 2, 3)); }
    static void TearDownTestSuite() { delete code_; }
    static QccCode *code_;
};
QccCode *Eq1Code::code_ = nullptr;

TEST_F(Eq1Code, WindowShape) {
    EXPECT_EQ(code_->length(), 24);
    EXPECT_EQ(code_->period(), 4);
    EXPECT_EQ(code_->stab().logical_x().size(), 3u);
    EXPECT_EQ(code_->stab().generators().size() + code_->stab().logical_x().size(), 24u);
    EXPECT_LE(code_->support_bound(), 4 * (2 * 2 + 1));
}

TEST_F(Eq1Code, GeneratorsCommuteAndLogicalsPair) {
    const auto &s = code_->stab();
    std::vector<std::string> g;
    for (const auto &op : s.generators()) g.push_back(op.to_string());
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) EXPECT_EQ(oracle::symp_product(g[i], g[j]), 0);
    for (std::size_t a = 0; a < s.logical_x().size(); ++a) {
        for (const auto &gen : g) {
            EXPECT_EQ(oracle::symp_product(s.logical_x()[a].to_string(), gen), 0);
            EXPECT_EQ(oracle::symp_product(s.logical_z()[a].to_string(), gen), 0);
        }
        for (std::size_t b = 0; b < s.logical_x().size(); ++b) {
            EXPECT_EQ(oracle::symp_product(s.logical_x()[a].to_string(), s.logical_z()[b].to_string()), a == b);
        }
    }
}

TEST_F(Eq1Code, TemplatesRepeatWithThePeriod) {
    auto span = span_of(code_->stab());
    const int L = code_->length();
    for (const auto &t : code_->stabilizer_templates()) {
        int placed = 0;
        for (int shift = -L; shift <= L; shift += code_->period()) {
            auto s = oracle::placed(t.pattern.to_string(), t.offset + shift, L);
            if (s.empty()) continue;
            // Placements near the edges may reach beyond the terminated tail;
            // every interior placement must be a stabilizer.
            if (t.offset + shift >= 0 && t.offset + shift + t.pattern.length() <= L - 2 * code_->period()) {
                EXPECT_TRUE(span.contains(oracle::symplectic(s))) << t.pattern.to_string() << " @" << t.offset + shift;
                ++placed;
            }
        }
        EXPECT_GT(placed, 0);
    }
}

TEST_F(Eq1Code, PhaseShiftMatchesPublishedString) {
    auto span = span_of(code_->stab());
    const int L = code_->length();
    bool found = false;
    for (int s = 0; s < static_cast<int>(code_->stab().logical_z().size()) && !found; ++s) {
        for (int off = 0; off + 8 <= L && !found; off += code_->period()) {
            found = equivalent(span, oracle::placed("XXXIXIXX", off, L), code_->stab().logical_z()[s].to_string());
        }
    }
    EXPECT_TRUE(found);
}

TEST_F(Eq1Code, InverseIsRecorded) {
    PolyMatrix prod = code_->parent().generator() * code_->inverse();
    EXPECT_EQ(prod.at(0, 0), Poly::monomial(2, 1, code_->inverse_delay()));
    EXPECT_EQ(code_->min_traceback(), (code_->support_bound() + 3) / 4);
}

TEST(BuildQcc, TrivialParent) {
    cc::ConvCode id(PolyMatrix::identity(2, 1));
    auto code = build_qcc(id, 2, 1);
    EXPECT_EQ(code.length(), 1);
    EXPECT_TRUE(code.stab().generators().empty());
    ASSERT_EQ(code.stab().logical_x().size(), 1u);
    std::set<std::string> pair{code.stab().logical_x()[0].to_string(), code.stab().logical_z()[0].to_string()};
    EXPECT_EQ(pair, (std::set<std::string>{"X", "Z"}));
}

TEST(BuildQcc, RepetitionParentHasWeightThreeLogicals) {
    auto code = build_qcc(repetition3(), 2, 3);
    const auto &z = code.logical_z_templates();
    const auto &x = code.logical_x_templates();
    ASSERT_FALSE(z.empty());
    ASSERT_FALSE(x.empty());
    EXPECT_EQ(z[0].pattern.to_string(), "XXX");
    EXPECT_EQ(x[0].pattern.weight(), 3);
    for (char c : x[0].pattern.to_string()) EXPECT_TRUE(c == 'Z' || c == 'I');
}

TEST(BuildQcc, QutritParent) {
    auto code = build_qcc(parent57(3), 3, 4);
    EXPECT_EQ(code.N(), 3u);
    EXPECT_EQ(code.stab().logical_x().size(), 4u);
    EXPECT_EQ(static_cast<int>(code.stab().generators().size()) + 4, code.length());
}

TEST(BuildQcc, Rejections) {
    cc::ConvCode bad(PolyMatrix(2, 1, 2, {Poly(2, {1, 1}), Poly(2, {1, 0, 1})}));
    auto kind_of = [](auto &&f) {
        try {
            f();
        } catch (const Error &e) {
            return e.kind();
        }
        return ErrorKind::Internal;
    };
    EXPECT_EQ(kind_of([&] { build_qcc(bad, 2, 3); }), ErrorKind::Catastrophic);
    EXPECT_EQ(kind_of([&] { codeword_form(bad); }), ErrorKind::Catastrophic);
    EXPECT_EQ(kind_of([&] { build_qcc(parent57(), 3, 3); }), ErrorKind::ModulusMismatch);
    EXPECT_EQ(kind_of([&] { build_qcc(parent57(), 2, 3, WindowPolicy::Truncated); }), ErrorKind::WindowTooSmall);
    EXPECT_EQ(kind_of([&] { build_qcc(parent57(), 2, 0); }), ErrorKind::InvalidArgument);
}

TEST(CodewordForm, UsesParentForBothSchedules) {
    auto f = codeword_form(parent57());
    EXPECT_EQ(f.a_coeffs, parent57().generator());
    EXPECT_EQ(f.b_coeffs, parent57().generator());
    cc::ConvCode memoryless(PolyMatrix(2, 1, 2, {Poly(2, {1}), Poly(2, {1})}));
    EXPECT_EQ(codeword_form(memoryless).a_coeffs.max_degree(), 0);
}

TEST(MinimalSpan, RejectsMixedGenerators) {
    EXPECT_THROW(minimal_span_css({PauliWindow::from_string("XZ")}), Error);
    auto out = minimal_span_css({PauliWindow::from_string("ZZZ"), PauliWindow::from_string("ZZI")});
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(out[0].to_string(), "ZZI");
    EXPECT_EQ(out[1].to_string(), "IIZ");
}

}  // namespace
}  // namespace qcc::code
