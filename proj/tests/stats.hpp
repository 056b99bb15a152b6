// Statistical helpers shared by the sampler tests.
#ifndef BETTI_THERMO_TEST_STATS_HPP
#define BETTI_THERMO_TEST_STATS_HPP

#include <cmath>
#include <cstdint>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>
#include <boost/math/distributions/poisson.hpp>

namespace stats {

// Pearson goodness of fit of integer samples against Poisson(mean); bins
// are merged until every expected count is at least 5.  Returns the p-value.
inline double poisson_gof_pvalue(const std::vector<std::uint64_t>& xs, double mean)
{
    const boost::math::poisson_distribution<> law(mean);
    const double n = static_cast<double>(xs.size());
    std::vector<double> expected, observed;
    double e = 0.0, o = 0.0, cdf = 0.0;
    std::uint64_t k = 0;
    for (;; ++k) {
        const double p = boost::math::pdf(law, static_cast<double>(k));
        e += n * p;
        cdf += p;
        for (auto x : xs)
            if (x == k)
                o += 1.0;
        if (e >= 5.0 && n * (1.0 - cdf) >= 5.0) {
            expected.push_back(e);
            observed.push_back(o);
            e = o = 0.0;
        }
        if (n * (1.0 - cdf) < 5.0)
            break;
    }
    // tail bin: everything above k
    double tail_o = o;
    for (auto x : xs)
        if (x > k)
            tail_o += 1.0;
    expected.push_back(e + n * (1.0 - cdf));
    observed.push_back(tail_o);
    double chi = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i)
        chi += (observed[i] - expected[i]) * (observed[i] - expected[i]) / expected[i];
    const boost::math::chi_squared_distribution<> ref(static_cast<double>(expected.size() - 1));
    return boost::math::cdf(boost::math::complement(ref, chi));
}

// Pearson test of observed cell counts against given probabilities.
inline double multinomial_gof_pvalue(const std::vector<double>& observed, const std::vector<double>& probs)
{
    double n = 0.0;
    for (double o : observed)
        n += o;
    double chi = 0.0;
    for (std::size_t i = 0; i < observed.size(); ++i) {
        const double e = n * probs[i];
        chi += (observed[i] - e) * (observed[i] - e) / e;
    }
    const boost::math::chi_squared_distribution<> ref(static_cast<double>(observed.size() - 1));
    return boost::math::cdf(boost::math::complement(ref, chi));
}

inline double correlation(const std::vector<double>& a, const std::vector<double>& b)
{
    const double n = static_cast<double>(a.size());
    double ma = 0.0, mb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        ma += a[i];
        mb += b[i];
    }
    ma /= n;
    mb /= n;
    double sab = 0.0, saa = 0.0, sbb = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        sab += (a[i] - ma) * (b[i] - mb);
        saa += (a[i] - ma) * (a[i] - ma);
        sbb += (b[i] - mb) * (b[i] - mb);
    }
    return sab / std::sqrt(saa * sbb);
}

}  // namespace stats

#endif
