#include "semiprimes/constants.hpp"

#include <cmath>
#include <stdexcept>

#include "semiprimes/zeta.hpp"

namespace semiprimes {

namespace {

// gamma_0..gamma_16 to 65 digits (mpmath `stieltjes`, mp.dps = 90; prefixes
// agree with the classical published tables).
const char* const kStieltjes[kStieltjesMaxIndex + 1] = {
    "0.57721566490153286060651209008240243104215933593992359880576723488",
    "-0.072815845483676724860586375874901319137736338334337952599006559741",
    "-0.0096903631928723184845303860352125293590658061013407498807013654519",
    "0.0020538344203033458661600465427533842857158044454106182454814833369",
    "0.0023253700654673000574681701775260680009044694137848509907580409071",
    "0.00079332381730106270175333487744444483073153940458488707573425626982",
    "-0.00023876934543019960987242184190800427778371515635807863147642530739",
    "-0.00052728956705775104607409750547885828199625347296989533101340422689",
    "-0.00035212335380303950960205216500120874172918053379235035665733150736",
    "-0.000034394774418088048177914623798227390620789538594441629759291904843",
    "0.00020533281490906479468372228923706530295985377416676430384020871435",
    "0.00027018443954390352667290208206795567382784205868840250397373580314",
    "0.00016727291210514019335350154334118344660780663280556582804779093765",
    "-0.000027463806603760158860007603693355181526785337670395536092833089168",
    "-0.00020920926205929994583713969734458495783154421150606956243420832572",
    "-0.00028346865532024144664293447499712697706870298071767525396994329297",
    "-0.00019969685830896977470778456320324039191576497403406127985966716255",
};

}  // namespace

StieltjesTable stieltjes_table(int digits) {
    if (digits > kStieltjesSourcePrecision) {
        throw std::invalid_argument("stieltjes_table: requested precision beyond table support (60 digits)");
    }
    StieltjesTable t;
    t.source_precision = kStieltjesSourcePrecision;
    const int work = digits + 5;
    t.gammas.reserve(kStieltjesMaxIndex + 1);
    for (const char* s : kStieltjes) t.gammas.push_back(BigReal::from_string(s, work));
    return t;
}

TruncatedSeries regularized_logderiv_series(int N, int digits) {
    StieltjesTable st = stieltjes_table(digits);
    if (N + 1 > static_cast<int>(st.gammas.size())) {
        throw std::invalid_argument("regularized_logderiv_series: insufficient Stieltjes table");
    }
    const int work = digits + 5;
    // g(t) = (s-1) zeta(s) at s = 1 + t:  1 + sum_n (-1)^n gamma_n / n! t^{n+1}
    TruncatedSeries g(N + 1, work);
    g[0] = BigReal(1L, work);
    mpz_class fact(1);
    for (int n = 0; n <= N; ++n) {
        if (n > 0) fact *= n;
        BigReal c = st.gammas[static_cast<size_t>(n)] / BigReal(mpq_class(fact), work);
        g[n + 1] = (n % 2 == 0) ? c : -c;
    }
    // zeta'/zeta + 1/(s-1) = g'/g  (log-derivative of the unit series)
    TruncatedSeries gp = series_derivative(g);
    TruncatedSeries gtrunc(N, work);
    for (int j = 0; j <= N; ++j) gtrunc[j] = g[j];
    return series_mul(gp, series_reciprocal(gtrunc));
}

mpq_class q_value(int n) {
    if (n < 1) throw std::invalid_argument("q_value: n >= 1 required");
    mpq_class q(0);
    for (int i = 1; i <= n - 1; ++i) {
        mpz_class num(1);
        mpz_mul_2exp(num.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(i));
        num -= 1;  // 2^i - 1
        q += mpq_class(num, mpz_class(i));
    }
    q.canonicalize();
    return q;
}

BigReal q_identity_residual(int n, int terms, int digits) {
    if (n < 1 || terms < 1) throw std::invalid_argument("q_identity_residual: n >= 1, terms >= 1 required");
    const int work = digits + 10;
    BigReal sum(0L, work);
    for (int i = 1; i <= terms; ++i) {
        mpz_class binom;
        mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(n + i - 1), static_cast<unsigned long>(n - 1));
        mpz_class den(i);
        mpz_mul_2exp(den.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(i));  // i * 2^i
        sum += BigReal(mpq_class(binom, den), work);
    }
    BigReal target = BigReal(mpq_class(q_value(n)), work) + BigReal(2L, work).log();
    return (sum - target).abs();
}

namespace {

// number of Moebius-series terms needed: i^(n-1) (log 2)^n 2^-i < 10^-(digits+5)
int mobius_cutoff(int n_max, int digits) {
    double target = -(digits + 5) * std::log(10.0);
    int i = 30;
    while (i < 4000) {
        double logterm = (n_max > 0 ? (n_max - 1) * std::log(static_cast<double>(i)) : 0.0) +
                         n_max * std::log(std::log(2.0)) - i * std::log(2.0);
        if (logterm < target) break;
        ++i;
    }
    return i;
}

}  // namespace

ConstantsTable build_constants(int n_max, int digits) {
    if (n_max < 0) throw std::invalid_argument("build_constants: n_max >= 0 required");
    const int work = digits + 10;

    ConstantsTable t;
    t.digits = digits;
    t.B.assign(static_cast<size_t>(n_max) + 1, BigReal(0L, work));
    t.B[0] = meissel_mertens(digits);

    if (n_max >= 1) {
        // Moebius series sum_{i>=2} mu(i) i^{n-1} (zeta'/zeta)^{(n-1)}(i),
        // all n at once so each i costs one zeta-derivative evaluation
        std::vector<BigReal> mob(static_cast<size_t>(n_max), BigReal(0L, work));
        int imax = mobius_cutoff(n_max, digits);
        for (int i = 2; i <= imax; ++i) {
            int mu = mobius(static_cast<uint64_t>(i));
            if (mu == 0) continue;
            LogDerivDerivs ld = logderiv_derivatives(i, n_max - 1, work);
            BigReal ipow(1L, work);
            for (int n = 1; n <= n_max; ++n) {
                BigReal term = ipow * ld.vals[static_cast<size_t>(n - 1)];
                mob[static_cast<size_t>(n - 1)] += (mu > 0) ? term : -term;
                ipow = ipow * static_cast<long>(i);
            }
        }
        // at `digits`, not `work`: accuracy is capped by the Stieltjes source anyway
        TruncatedSeries reg = regularized_logderiv_series(std::max(n_max, 2), digits);
        mpz_class fact(1);
        for (int n = 1; n <= n_max; ++n) {
            if (n >= 2) fact *= (n - 1);  // (n-1)!
            BigReal limit_term = BigReal(mpq_class(fact), work) * reg[n - 1];
            BigReal b = mob[static_cast<size_t>(n - 1)] + limit_term;
            t.B[static_cast<size_t>(n)] = (n % 2 == 0) ? b : -b;
        }
    }

    // C_n = n! (sum_{i<=n} B_i/i! - H_n)
    t.H.assign(static_cast<size_t>(n_max) + 1, mpq_class(0));
    for (int n = 1; n <= n_max; ++n) t.H[static_cast<size_t>(n)] = t.H[static_cast<size_t>(n) - 1] + mpq_class(1, n);
    t.C.assign(static_cast<size_t>(n_max) + 1, BigReal(0L, work));
    t.C[0] = t.B[0];
    {
        BigReal partial = t.B[0];  // sum B_i / i!
        mpz_class fact(1);
        for (int n = 1; n <= n_max; ++n) {
            fact *= n;
            partial += t.B[static_cast<size_t>(n)] / BigReal(mpq_class(fact), work);
            t.C[static_cast<size_t>(n)] =
                BigReal(mpq_class(fact), work) * (partial - BigReal(t.H[static_cast<size_t>(n)], work));
        }
    }

    t.q.assign(static_cast<size_t>(n_max) + 2, mpq_class(0));
    for (int n = 1; n <= n_max + 1; ++n) t.q[static_cast<size_t>(n)] = q_value(n);
    return t;
}

BigReal compute_B(int n, int digits) { return build_constants(n, digits).B[static_cast<size_t>(n)]; }

BigReal compute_C(int n, int digits) { return build_constants(n, digits).C[static_cast<size_t>(n)]; }

}  // namespace semiprimes
