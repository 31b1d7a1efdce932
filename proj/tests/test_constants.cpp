#include <doctest.h>

#include "semiprimes/constants.hpp"

using namespace semiprimes;

namespace {

constexpr int kDigits = 40;

BigReal tol(int d) { return BigReal(10L, kDigits).pow_si(-d); }

// Reference values computed independently with an arbitrary-precision
// library (Euler-Maclaurin zeta derivatives + Stieltjes series), 30 digits.
const char* const kRefB[11] = {
    "0.261497212847642783755426838609",
    "-1.33258227573322088176582877607",
    "-2.55510761544644523959558379799",
    "-10.2538270969110075387787767411",
    "-59.3323979717972728673195290222",
    "-453.624590860932484915158069803",
    "-4359.12496004203984785669925343",
    "-50684.8409784215596972318317144",
    "-692706.773919572383426686564825",
    "-10884508.606344549881087042855",
    "-193290090.992897724732297255086",
};
const char* const kRefC[11] = {
    "0.261497212847642783755426838609",
    "-2.07108506288557809801040193746",
    "-7.69727774121760143561638767291",
    "-35.3456603205638118456279397599",
    "-206.715039254052520249831288062",
    "-1511.19978713119508616431451011",
    "-13546.3236828292103648425863141",
    "-146229.106758226032251129935913",
    "-1867579.62798538064143572605213",
    "-27733045.2582129756540085773241",
    "-470983423.575027481272383028327",
};

}  // namespace

TEST_SUITE("constants") {

TEST_CASE("Stieltjes table prefix and guard") {
    StieltjesTable st = stieltjes_table(40);
    CHECK((st.gammas[0] - BigReal::from_string("0.5772156649", 40)).abs() < BigReal::from_string("1e-10", 40));
    CHECK(st.gammas.size() >= 13);  // need indices through 12 for the n <= 10 table
    CHECK(st.source_precision >= 60);
    CHECK_THROWS_AS(stieltjes_table(80), std::invalid_argument);
}

TEST_CASE("regularized log-derivative series reproduces the symbolic Laurent coefficients") {
    TruncatedSeries reg = regularized_logderiv_series(6, 40);
    StieltjesTable st = stieltjes_table(40);
    const BigReal& g0 = st.gammas[0];
    const BigReal& g1 = st.gammas[1];
    const BigReal& g2 = st.gammas[2];
    const BigReal& g3 = st.gammas[3];

    CHECK((reg[0] - g0).abs() < tol(36));
    CHECK((reg[1] - (-(g1 * 2L) - g0 * g0)).abs() < tol(36));
    BigReal c2 = BigReal(mpq_class(3, 2), 40) * g2 + g0 * g1 * 3L + g0.pow_si(3);
    CHECK((reg[2] - c2).abs() < tol(36));
    BigReal c3 = -(BigReal(mpq_class(2, 3), 40) * g3) - g0 * g2 * 2L - g1 * g1 * 2L - g0 * g0 * g1 * 4L -
                 g0.pow_si(4);
    CHECK((reg[3] - c3).abs() < tol(35));
}

TEST_CASE("q_value exact rationals") {
    CHECK(q_value(1) == 0);
    CHECK(q_value(2) == mpq_class(1));
    CHECK(q_value(4) == mpq_class(29, 6));
    CHECK(q_value(6) == mpq_class(887, 60));
    CHECK_THROWS_AS(q_value(0), std::invalid_argument);
    // strictly increasing from q_2 on
    for (int n = 2; n <= 12; ++n) CHECK(q_value(n + 1) > q_value(n));
}

TEST_CASE("q identity residual shrinks with more terms") {
    CHECK(q_identity_residual(2, 60, 40) < BigReal::from_string("1e-12", 40));
    for (int n = 1; n <= 6; ++n) {
        for (int t : {10, 20, 40}) {
            CHECK(q_identity_residual(n, 2 * t, 40) < q_identity_residual(n, t, 40));
        }
    }
    // n = 1 is the Mercator series for log 2
    CHECK(q_identity_residual(1, 120, 40) < BigReal::from_string("1e-36", 40));
}

TEST_CASE("B_n and C_n match the independent 30-digit reference to 25 digits") {
    ConstantsTable t = build_constants(10, 40);
    for (int n = 0; n <= 10; ++n) {
        BigReal refB = BigReal::from_string(kRefB[n], 40);
        BigReal refC = BigReal::from_string(kRefC[n], 40);
        // relative agreement to 25 digits
        CHECK((t.B[n] - refB).abs() < refB.abs() * tol(25));
        CHECK((t.C[n] - refC).abs() < refC.abs() * tol(25));
    }
}

TEST_CASE("compute_B / compute_C single-value wrappers") {
    CHECK((compute_B(1, 40) - BigReal::from_string(kRefB[1], 40)).abs() < tol(24));
    CHECK((compute_C(1, 40) - BigReal::from_string(kRefC[1], 40)).abs() < tol(24));
}

TEST_CASE("C/B consistency identity, independent of any reference table") {
    ConstantsTable t = build_constants(4, 40);
    CHECK(t.B[0] == t.C[0]);
    // C_1 = B_0 + B_1 - 1
    CHECK((t.C[1] - (t.B[0] + t.B[1] - 1L)).abs() < tol(34));
    // C_2 = 2(B_0 + B_1 + B_2/2 - 3/2)
    BigReal c2 = (t.B[0] + t.B[1] + t.B[2] / 2L - BigReal(mpq_class(3, 2), 40)) * 2L;
    CHECK((t.C[2] - c2).abs() < tol(32));
    // harmonic numbers are exact
    CHECK(t.H[4] == mpq_class(25, 12));
}

TEST_CASE("precision robustness: 40 vs 60 digit runs agree on 20 reported digits") {
    ConstantsTable a = build_constants(10, 40);
    ConstantsTable b = build_constants(10, 60);
    for (int n = 0; n <= 10; ++n) {
        CHECK((a.B[n] - b.B[n]).abs() < b.B[n].abs() * tol(21));
        CHECK((a.C[n] - b.C[n]).abs() < b.C[n].abs() * tol(21));
    }
}

}  // TEST_SUITE
