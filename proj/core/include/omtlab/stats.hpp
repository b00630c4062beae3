#pragma once

namespace omtlab {

// Regularized incomplete gamma functions, accurate to ~1e-10: series
// expansion for x < a+1, Lentz continued fraction otherwise.
double regularized_gamma_p(double a, double x);  // P(a, x), lower
double regularized_gamma_q(double a, double x);  // Q(a, x) = 1 - P(a, x)

// Upper tail of the chi-square distribution with df degrees of freedom.
double chi_square_upper_tail(double statistic, double df);

struct WilsonInterval {
    double low = 0.0;
    double high = 0.0;
};

// 95% Wilson score interval; well behaved at proportions near 0 and 1.
WilsonInterval wilson_interval_95(long hits, long n);

}  // namespace omtlab
