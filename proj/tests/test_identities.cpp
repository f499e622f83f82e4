#include "oracle.hpp"

#include "trib/errors.hpp"
#include "trib/identities.hpp"
#include "trib/report_json.hpp"

#include <gtest/gtest.h>

#include <set>
#include <stdexcept>

using namespace trib;

TEST(Registry, NamesAreUniqueAndParse)
{
    std::set<std::string_view> names;
    for (const auto& entry : identity_registry) {
        EXPECT_TRUE(names.insert(entry.name).second) << entry.name;
        EXPECT_EQ(parse_identity(entry.name), entry.id);
        EXPECT_FALSE(entry.checks.empty());
    }
    EXPECT_EQ(names.size(), 17u);
    EXPECT_FALSE(parse_identity("no-such-id").has_value());
}

TEST(Verify, CubicIdentity)
{
    VerificationReport r = verify(IdentityId::CubicIdentity41, 3, 300);
    EXPECT_EQ(r.status, Status::Pass);
    EXPECT_EQ(r.checked, 298u);
    EXPECT_FALSE(r.bits.has_value());
    EXPECT_TRUE(r.note.empty());
}

TEST(Verify, CassiniAndNegativeRange)
{
    EXPECT_EQ(verify("cassini-t", 3, 300).status, Status::Pass);
    VerificationReport r = verify("h-eq-k-minus-t", -50, 200);
    EXPECT_EQ(r.status, Status::Pass);
    EXPECT_EQ(r.checked, 251u);
    EXPECT_EQ(r.lo, -50);
}

TEST(Verify, UnknownAndInvalid)
{
    EXPECT_THROW(verify("no-such-id", 0, 1), std::invalid_argument);
    EXPECT_THROW(verify(IdentityId::TribRecurrence, 5, 4), InvalidRange);
}

TEST(Verify, ClampingIsRecorded)
{
    VerificationReport r = verify(IdentityId::HFromT, -5, 10);
    EXPECT_EQ(r.status, Status::Pass);
    EXPECT_EQ(r.lo, 1);
    EXPECT_EQ(r.hi, 10);
    EXPECT_EQ(r.checked, 10u);
    EXPECT_EQ(r.note, "lo clamped from -5 to 1 (domain n >= 1)");
}

TEST(Verify, EmptyClampedRangeIsVacuous)
{
    VerificationReport r = verify(IdentityId::CubicIdentity41, 0, 0);
    EXPECT_EQ(r.status, Status::Pass);
    EXPECT_EQ(r.checked, 0u);
    EXPECT_EQ(r.hi, r.lo - 1);
    EXPECT_NE(r.note.find("vacuously"), std::string::npos);
}

TEST(Verify, NumericReportsCarryPrecision)
{
    VerificationReport r = verify(IdentityId::BinetT, 0, 50, {Precision(128), std::nullopt});
    EXPECT_EQ(r.status, Status::Pass);
    ASSERT_TRUE(r.bits.has_value());
    EXPECT_GE(*r.bits, 128);
}

TEST(VerifyAll, FullSuite)
{
    auto reports = verify_all(0, 100, Precision(128));
    ASSERT_EQ(reports.size(), identity_count);
    for (std::size_t i = 0; i < reports.size(); ++i) {
        EXPECT_EQ(reports[i].id, identity_registry[i].id);
        EXPECT_EQ(reports[i].status, Status::Pass) << to_string(reports[i].id);
        EXPECT_EQ(reports[i].checked, std::uint64_t(reports[i].hi - reports[i].lo + 1));
        EXPECT_EQ(reports[i].bits.has_value(), identity_registry[i].numeric);
    }
    EXPECT_TRUE(all_pass(reports));
}

TEST(VerifyAll, SinglePoints)
{
    auto at0 = verify_all(0, 0, Precision(128));
    auto cubic0 = at0[static_cast<std::size_t>(IdentityId::CubicIdentity41)];
    EXPECT_EQ(cubic0.status, Status::Pass);
    EXPECT_EQ(cubic0.checked, 0u);
    auto at3 = verify_all(3, 3, Precision(128));
    EXPECT_EQ(at3[static_cast<std::size_t>(IdentityId::CubicIdentity41)].checked, 1u);
    EXPECT_TRUE(all_pass(at3));
}

TEST(VerifyAll, NegativeRange)
{
    auto reports = verify_all(-40, 40, Precision(128));
    EXPECT_TRUE(all_pass(reports));
}

TEST(VerifyAll, Deterministic)
{
    auto a = reports_document(verify_all(-10, 60, Precision(128))).dump();
    auto b = reports_document(verify_all(-10, 60, Precision(128))).dump();
    EXPECT_EQ(a, b);
}

TEST(Report, JsonRoundTrip)
{
    auto reports = verify_all(0, 20, Precision(128));
    reports.push_back(verify(IdentityId::K41Relation, 0, 20, {std::nullopt, Perturbation{SeqId::H, 7, 1}}));
    ASSERT_TRUE(reports.back().first_failure.has_value());
    auto doc = reports_document(reports);
    EXPECT_EQ(parse_reports_document(nlohmann::json::parse(doc.dump())), reports);
    EXPECT_TRUE(doc["reports"][0]["first_failure"].is_null());
    EXPECT_TRUE(doc["reports"][0]["bits"].is_null());
    EXPECT_EQ(doc["reports"][0]["status"], "pass");
}

TEST(Mutation, PerturbedValueIsReported)
{
    VerificationReport r = verify(IdentityId::HRecurrence, 0, 50, {std::nullopt, Perturbation{SeqId::H, 20, 1}});
    EXPECT_EQ(r.status, Status::Fail);
    ASSERT_TRUE(r.first_failure.has_value());
    EXPECT_EQ(r.first_failure->n, 20);
    EXPECT_EQ(r.first_failure->expected, seq_value(SeqId::H, 20).get_str());
}

TEST(Mutation, SeededSingleValueCorruptionFlipsSuite)
{
    auto gen = oracle::rng(5);
    std::uniform_int_distribution<Index> pick(-4, 104);
    for (int trial = 0; trial < 6; ++trial) {
        Perturbation p{SeqId::H, pick(gen), 1};
        auto reports = verify_all(0, 100, Precision(128), p);
        EXPECT_FALSE(all_pass(reports)) << "perturbed index " << p.index;
    }
    for (SeqId seq : {SeqId::T, SeqId::K}) {
        Perturbation p{seq, pick(gen), 1};
        EXPECT_FALSE(all_pass(verify_all(0, 100, Precision(128), p))) << to_string(seq) << " " << p.index;
    }
}

TEST(SequenceTable, Bounds)
{
    SequenceTable t(-3, 10, Perturbation{SeqId::K, 4, 5});
    EXPECT_EQ(t.at(SeqId::K, 4), 16);
    EXPECT_EQ(t.at(SeqId::H, -3), 6);
    EXPECT_THROW(t.at(SeqId::H, 11), std::out_of_range);
}
