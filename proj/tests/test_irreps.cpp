#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "grouplin/irreps.hpp"
#include "oracle.hpp"

using namespace grouplin;

namespace {

std::vector<std::size_t> dims_of(const IrrepSet& s) {
    std::vector<std::size_t> d;
    for (const auto& r : s.irreps()) d.push_back(r.dim);
    return d;
}

std::size_t sum_dim_sq(const IrrepSet& s) {
    std::size_t t = 0;
    for (const auto& r : s.irreps()) t += r.dim * r.dim;
    return t;
}

}  // namespace

TEST(Irreps, CyclicTwo) {
    auto s = irreps_of(make_cyclic(2));
    ASSERT_EQ(s->size(), 2u);
    EXPECT_NEAR(std::abs(s->irreps()[0].character(1) - Complex(1, 0)), 0, 1e-12);
    EXPECT_NEAR(std::abs(s->irreps()[1].character(1) - Complex(-1, 0)), 0, 1e-12);
    EXPECT_EQ(s->principal_index(), 0u);
}

TEST(Irreps, CyclicCharactersMatchRootsOfUnity) {
    for (unsigned n : {3u, 5u, 8u, 12u}) {
        auto s = irreps_of(make_cyclic(n));
        ASSERT_EQ(s->size(), n);
        // Same set of characters as the oracle's, in any order.
        const auto ref = oracle::cyclic_reps(n);
        for (const auto& r : s->irreps()) {
            bool found = false;
            for (const auto& o : ref) {
                double diff = 0;
                for (Element x = 0; x < n; ++x)
                    diff = std::max(diff, std::abs(r.character(x) - o.mats[x].at(0, 0)));
                found = found || diff < 1e-12;
            }
            EXPECT_TRUE(found) << "C" << n << " irrep " << r.id;
        }
    }
}

TEST(Irreps, Symmetric3Dims) {
    auto s = irreps_of(make_symmetric3());
    auto d = dims_of(*s);
    std::sort(d.begin(), d.end());
    EXPECT_EQ(d, (std::vector<std::size_t>{1, 1, 2}));
    EXPECT_EQ(sum_dim_sq(*s), 6u);
}

TEST(Irreps, Symmetric3Characters) {
    // Standard character is (fixed points − 1).
    auto s = irreps_of(make_symmetric3());
    for (const auto& r : s->irreps()) {
        if (r.dim != 2) continue;
        for (Element g = 0; g < 6; ++g) {
            const auto& p = oracle::s3_perms()[g];
            const int fixed = (p[0] == 0) + (p[1] == 1) + (p[2] == 2);
            EXPECT_NEAR(std::abs(r.character(g) - Complex(fixed - 1, 0)), 0, 1e-12);
        }
    }
}

TEST(Irreps, TabulatedS3IsTheRootLatticeAction) {
    auto s = irreps_of(make_symmetric3(), Realization::tabulated);
    const auto ref = oracle::s3_standard(false);
    const Irrep* two = nullptr;
    for (const auto& r : s->irreps())
        if (r.dim == 2) two = &r;
    ASSERT_NE(two, nullptr);
    for (Element g = 0; g < 6; ++g)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                EXPECT_NEAR(std::abs((*two)(g)(i, j) - ref.mats[g].at(int(i), int(j))), 0, 1e-12)
                    << "element " << g;
    // Not unitary: the (12) matrix has a 1 off the diagonal.
    const CMatrix m = (*two)(1);
    EXPECT_GT((m * m.adjoint()).max_abs_diff(CMatrix::identity(2)), 0.5);
}

TEST(Irreps, Quaternion) {
    auto s = irreps_of(make_quaternion8());
    auto d = dims_of(*s);
    std::sort(d.begin(), d.end());
    EXPECT_EQ(d, (std::vector<std::size_t>{1, 1, 1, 1, 2}));
    EXPECT_EQ(sum_dim_sq(*s), 8u);
}

TEST(Irreps, ProductS3C3) {
    auto g = parse_group_spec("S3xC3");
    auto s = irreps_of(g);
    EXPECT_EQ(s->size(), 9u);
    EXPECT_EQ(sum_dim_sq(*s), 18u);
    ASSERT_TRUE(s->layout().has_value());
    EXPECT_EQ(s->layout()->left_count, 3u);
    EXPECT_EQ(s->layout()->right_count, 3u);

    // Tensor characters are products of factor characters.
    auto left = irreps_of(make_symmetric3());
    auto right = irreps_of(make_cyclic(3));
    for (const auto& r : s->irreps()) {
        ASSERT_TRUE(r.factor_ids.has_value());
        const auto& a = (*left)[r.factor_ids->first];
        const auto& b = (*right)[r.factor_ids->second];
        EXPECT_EQ(r.dim, a.dim * b.dim);
        for (Element k = 0; k < 6; ++k)
            for (Element n = 0; n < 3; ++n)
                EXPECT_NEAR(std::abs(r.character(k * 3 + n) - a.character(k) * b.character(n)), 0,
                            1e-12);
        EXPECT_EQ(s->nonprincipal_on_right(r.id), !b.is_principal);
    }
}

TEST(Irreps, TensorOfPrincipalsIsPrincipal) {
    auto a = irreps_of(make_symmetric3());
    auto b = irreps_of(make_cyclic(4));
    const Irrep t = tensor((*a)[a->principal_index()], (*b)[b->principal_index()]);
    EXPECT_EQ(t.dim, 1u);
    for (const auto& m : t.matrices) EXPECT_NEAR(std::abs(m(0, 0) - Complex(1, 0)), 0, 1e-15);
    auto s = irreps_of(parse_group_spec("S3xC4"));
    EXPECT_TRUE((*s)[s->principal_index()].is_principal);
}

TEST(Irreps, TensorDims) {
    auto a = irreps_of(make_symmetric3());
    auto b = irreps_of(make_cyclic(2));
    for (const auto& x : a->irreps())
        for (const auto& y : b->irreps()) EXPECT_EQ(tensor(x, y).dim, x.dim * y.dim);
}

TEST(Irreps, OrthogonalityAtS3AndC6) {
    auto s = irreps_of(make_symmetric3());
    Complex at_identity = 0;
    for (const auto& r : s->irreps()) at_identity += double(r.dim) * r.character(0);
    EXPECT_NEAR(std::abs(at_identity - Complex(6, 0)), 0, 1e-12);

    auto c = irreps_of(make_cyclic(6));
    for (const auto& r : c->irreps()) {
        if (r.is_principal) continue;
        Complex total = 0;
        for (Element g = 0; g < 6; ++g) total += r.character(g);
        EXPECT_NEAR(std::abs(total), 0, 1e-12);
    }
}

TEST(Irreps, VerifyEverythingUpTo64) {
    std::vector<std::string> specs;
    for (int n = 1; n <= 64; ++n) specs.push_back("C" + std::to_string(n));
    for (int n = 2; n <= 32; ++n) specs.push_back("D" + std::to_string(n));
    for (const char* s : {"S3", "Q8", "S3xS3", "Q8xQ8", "D4xQ8", "S3xC8", "C2xC2xC2xC2xC2xC2",
                          "C4xC4xC4", "S3xD5", "Q8xS3", "D8xC4", "C2xQ8xC2", "S3xC2xC5"})
        specs.push_back(s);
    for (const auto& spec : specs) {
        auto g = parse_group_spec(spec);
        for (auto realization : {Realization::unitary, Realization::tabulated}) {
            auto s = irreps_of(g, realization);
            const auto report = verify_irrep_set(*s);
            EXPECT_TRUE(report.passed()) << spec << " " << to_string(realization);
            EXPECT_LT(report.max_residual(), 1e-9) << spec;
            EXPECT_EQ(s->size(), conjugacy_class_count(*g)) << spec;
        }
    }
}

TEST(Irreps, CorruptedSetFails) {
    auto s = irreps_of(make_symmetric3());
    std::vector<Irrep> irreps = s->irreps();
    for (auto& r : irreps)
        if (r.dim == 2) r.matrices[4](0, 1) += Complex(0.1, 0);
    const IrrepSet bad(s->group(), irreps, s->realization());
    EXPECT_FALSE(verify_irrep_set(bad).passed());

    // Dropping an irrep breaks completeness.
    irreps = s->irreps();
    irreps.pop_back();
    const IrrepSet short_set(s->group(), irreps, s->realization());
    EXPECT_FALSE(verify_irrep_set(short_set).passed());
}

TEST(Irreps, UnsupportedGroup) {
    auto g = make_group("raw", {"a", "b"}, {0, 1, 1, 0});
    EXPECT_THROW(irreps_of(g), IrrepError);
}

TEST(Irreps, RealizationNames) {
    EXPECT_EQ(parse_realization("unitary"), Realization::unitary);
    EXPECT_EQ(parse_realization("tabulated"), Realization::tabulated);
    EXPECT_THROW(parse_realization("other"), std::invalid_argument);
}
