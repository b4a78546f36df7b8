#pragma once

#include <string>

#include "thetascale/curves.hpp"
#include "thetascale/dynamics.hpp"
#include "thetascale/geometry.hpp"
#include "thetascale/quantum.hpp"
#include "thetascale/theta_field.hpp"
#include "thetascale/vec.hpp"

namespace thetascale {

// Grammar (one string per object, lowercase keyword prefix):
//
//   point      t,x1[,x2[,x3]]
//   theta      constant:<c> | linear:<b1,..,bd>[;<c>] | radial:<K>@<cx,..>
//              | time-linear:<k>[@<t_ref>] | time-quadratic:<k>[@<t_ref>]
//              | table:<path>            (rows x,theta; 1-D)
//   metric     euclidean[:<d>] | minkowski[:<d>] | frw:<k>;a=<num|poly:c0,c1,...>
//   curve      segment:t0,x..,t1,x..    (two points, equal length)
//              | poly:<t coeffs>;<x1 coeffs>[;<x2>][;<x3>]
//              | polyline:@<path>       (rows t,x1[,x2[,x3]])
//   packet     gaussian:<mu1,..>;<sigma1,..> | sampled:@<path>  (rows y,re[,im])
//   lagrangian free:<m> | harmonic:<m>;<k>
//
// Numbers are plain decimal literals. parse_error names the offending token.

Point parse_point(const std::string& s);
ThetaField parse_theta(const std::string& s);
Metric parse_metric(const std::string& s);
Curve parse_curve(const std::string& s);
WavePacket parse_packet(const std::string& s);
Lagrangian parse_lagrangian(const std::string& s);

double parse_double(const std::string& tok, const std::string& what);
std::vector<double> parse_double_list(const std::string& s, const std::string& what);

} // namespace thetascale
