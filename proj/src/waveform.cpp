#include "qbs/waveform.hpp"

#include <cmath>

#include "qbs/specfun.hpp"

namespace qbs {

namespace {

struct ValueVisitor {
    double x;
    double operator()(const Sinusoid& s) const { return s.amp * std::sin(s.k * x + s.phi); }
    double operator()(const ExpPair& e) const {
        return e.a * std::exp(-e.kappa * (x - e.x0)) + e.b * std::exp(e.kappa * (x - e.x0));
    }
    double operator()(const AiryComb& a) const {
        const double z = a.kappa_f * (x + a.x_shift);
        const auto p = specfun::airy(-z);
        return a.c_ai * p.ai + a.c_bi * p.bi;
    }
};

struct DerivVisitor {
    double x;
    double operator()(const Sinusoid& s) const { return s.amp * s.k * std::cos(s.k * x + s.phi); }
    double operator()(const ExpPair& e) const {
        return -e.kappa * e.a * std::exp(-e.kappa * (x - e.x0)) +
               e.kappa * e.b * std::exp(e.kappa * (x - e.x0));
    }
    double operator()(const AiryComb& a) const {
        // d/dx [Ai(-z)] = -kappa_f Ai'(-z)
        const double z = a.kappa_f * (x + a.x_shift);
        const auto p = specfun::airy(-z);
        return -a.kappa_f * (a.c_ai * p.ai_prime + a.c_bi * p.bi_prime);
    }
};

double eval_regions(const std::vector<Region>& regions, double x, bool deriv) {
    for (const Region& r : regions) {
        if (x >= r.lo && x <= r.hi) {
            return deriv ? std::visit(DerivVisitor{x}, r.form)
                         : std::visit(ValueVisitor{x}, r.form);
        }
    }
    throw contract_error("waveform: x outside every region");
}

} // namespace

double region_value(const Region& r, double x) { return std::visit(ValueVisitor{x}, r.form); }
double region_derivative(const Region& r, double x) { return std::visit(DerivVisitor{x}, r.form); }

double Waveform::value(double x) const { return eval_regions(regions, x, false); }
double Waveform::derivative(double x) const { return eval_regions(regions, x, true); }

double Waveform::envelope_value(double x) const {
    return eval_regions(envelope_regions, x, false);
}

void Waveform::sample_grid(const std::vector<double>& xs) {
    samples.clear();
    envelope_samples.clear();
    samples.reserve(xs.size());
    for (double x : xs) samples.push_back({x, value(x)});
    if (has_envelope()) {
        envelope_samples.reserve(xs.size());
        for (double x : xs) envelope_samples.push_back({x, envelope_value(x)});
    }
}

const Region& Waveform::tail() const {
    if (regions.empty()) throw contract_error("waveform: no regions");
    return regions.back();
}

} // namespace qbs
