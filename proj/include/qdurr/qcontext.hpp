#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace qdurr {

enum class Precision { standard, extended };

/// Evaluation context shared by every series and product in the library:
/// the parameter q together with the truncation policy.
struct QContext {
    double q;
    double eps_term = 1e-16;   // relative termination tolerance
    double eps_tail = 1e-12;   // target tail bound (relative)
    int max_terms = 200000;    // cap on series/product length
    Precision precision_tier = Precision::standard;

    explicit QContext(double q_) : q(q_) { validate(); }
    QContext(double q_, Precision tier) : q(q_), precision_tier(tier) { validate(); }

    void validate() const {
        if (!(q > 0.0 && q < 1.0))
            throw std::domain_error("q must lie in (0,1)");
        if (q > 0.99)
            throw std::domain_error("q must be at most 0.99 (term counts grow like 1/(1-q))");
        if (!(eps_term > 0.0))
            throw std::domain_error("eps_term must be positive");
        if (!(eps_tail > 0.0))
            throw std::domain_error("eps_tail must be positive");
        if (max_terms < 1)
            throw std::domain_error("max_terms must be at least 1");
    }
};

struct TruncationReport {
    int terms_used = 0;
    double tail_bound = 0.0;   // absolute bound on the neglected remainder
    bool converged = true;
};

/// Thrown when a series or product hits max_terms before its tail bound
/// passes the tolerance. Carries the partial value for diagnostics.
class TruncationError : public std::runtime_error {
public:
    TruncationError(const std::string& what_, std::complex<double> partial_,
                    TruncationReport report_)
        : std::runtime_error(what_), partial(partial_), report(report_) {}

    std::complex<double> partial;
    TruncationReport report;
};

} // namespace qdurr
