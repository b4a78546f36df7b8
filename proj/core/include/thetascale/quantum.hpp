#pragma once

#include <complex>
#include <string>
#include <vector>

#include "thetascale/quadrature.hpp"
#include "thetascale/theta_field.hpp"
#include "thetascale/vec.hpp"

namespace thetascale {

enum class PacketKind { gaussian, sampled };

struct WavePacket {
    PacketKind kind = PacketKind::gaussian;
    int dim = 1;
    Vec mu;    // gaussian mean
    Vec sigma; // gaussian per-axis standard deviation of the amplitude
    std::vector<double> grid; // sampled: 1-D coordinate grid
    std::vector<std::complex<double>> amp;
    bool normalized = true; // sampled: did the grid sum of |psi|^2 come out as 1

    static WavePacket gaussian(const Vec& mu, const Vec& sigma);
    static WavePacket sampled(std::vector<double> grid, std::vector<std::complex<double>> amp);
};

enum class Quantity { norm, position, momentum };

const char* to_string(Quantity q);

struct ScaledExpectation {
    double value = 0.0;
    Point ref;
    Quantity quantity = Quantity::norm;
    int axis = 0;
    std::string theta_id;
};

// Integral of exp(theta(y) - theta(ref)) |psi(y)|^2 over space, the packet
// evaluated at the reference time. Gaussians integrate per axis (adaptive,
// bounds extended until the tails stop contributing); sampled packets use
// their own grid.
ScaledExpectation scaled_norm(const WavePacket& psi, const ThetaField& theta, const Point& ref,
                              const QuadratureConfig& quad = {});

// Same integral with the position component y_axis inserted.
ScaledExpectation scaled_position(const WavePacket& psi, const ThetaField& theta,
                                  const Point& ref, int axis = 0,
                                  const QuadratureConfig& quad = {});

// Momentum expectation for sampled packets: Re conj(psi) p~ psi summed with
// the scaling weight.
ScaledExpectation scaled_momentum(const WavePacket& psi, const ThetaField& theta,
                                  const Point& ref, double hbar = 1.0,
                                  const QuadratureConfig& quad = {});

// External scaling: move an expectation to a new reference point by one
// multiplicative factor.
ScaledExpectation transfer_expectation(const ScaledExpectation& e, const ThetaField& theta,
                                       const Point& to);

} // namespace thetascale
