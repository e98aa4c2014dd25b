// Generated by tools/oracles.py (mpmath, 60 digits). Do not edit.
#pragma once

namespace oracle {

inline constexpr double kBesselI_0p3_2p5 = 3.1939093578017904917;
inline constexpr double kBesselI_0p5_1 = 0.93767488824548764672;
inline constexpr double kBesselI_2p7_0p01 = 1.4689872111963823133e-7;
inline constexpr double kBesselI_7p25_3 = 0.0029536256761361975534;
inline constexpr double kBesselIScaled_10p5_35 = 0.013861004730396747512;
inline constexpr double kBesselIScaled_0_100 = 0.039944379299096682648;
inline constexpr double kBesselIScaled_40_45 = 2.5613237339087823726e-9;
inline constexpr double kLaguerre_0p3_7_4p4 = -1.9212051857341269841;
inline constexpr double kLaguerre_2p5_12_30 = 1.6714583000119630392e+5;
inline constexpr double kPkm_0p7_4_2p1 = -0.11406149578865473734;
inline constexpr double kModeNormSq_0p3_1_2_3 = 6.6241980606075141909;
inline constexpr double kModeNormSq_0p5_2_0_0 = 2.7841639984158539226;
inline constexpr double kEigenfunction_0p3_1_k1_m2_re = -0.0090786061678103598196;
inline constexpr double kEigenfunction_0p3_1_k1_m2_im = 0.015523023370422085072;
inline constexpr double kEigenfunctionNormalized_0p3_1_k1_m2_re = -0.0041627834640425287167;
inline constexpr double kEigenfunctionNormalized_0p3_1_k1_m2_im = 0.0071177209148531689651;
inline constexpr double kGaussCoeff_m0 = 0.76773888338216456327;
inline constexpr double kGaussCoeff_m1 = 0.62685617332680754736;
inline constexpr double kGaussCoeff_m2 = 0.47657562532920493741;
inline constexpr double kGaussCoeff_m3 = 0.35816949666364814925;
inline constexpr double kHeat_a0p5_t0p5_diag_re = 0.14609691206179208747;
inline constexpr double kHeat_a0p5_t0p5_diag_im = 0.0;
inline constexpr double kHeat_a0p5_t0p25_re = 0.024613312523649578154;
inline constexpr double kHeat_a0p5_t0p25_im = 0.058605446180476548322;
inline constexpr double kHeat_a0p1_b2_t0p05_re = 1.7701471911144122308e-16;
inline constexpr double kHeat_a0p1_b2_t0p05_im = -2.226530128667820441e-77;
inline constexpr double kHeat_a0p9_b0p5_t1_re = -0.0031411939431010524221;
inline constexpr double kHeat_a0p9_b0p5_t1_im = 0.015329802081733338313;
inline constexpr double kHeat_a0p5_t0p7_opposite_re = -0.0086604704787297533488;
inline constexpr double kHeat_a0p5_t0p7_opposite_im = -1.6173445486430366961e-63;
inline constexpr double kHeat_a0_t0p5_quarter_re = 0.045421811111798557186;
inline constexpr double kHeat_a0_t0p5_quarter_im = 0.024814048503589902368;
inline constexpr double kSupMode_0p5_k0_m0 = 0.27752778920587013252;
inline constexpr double kSupMode_0p5_k1_m2 = 0.2108862725172446679;

} // namespace oracle
