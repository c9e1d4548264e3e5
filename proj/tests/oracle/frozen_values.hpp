#pragma once

// Generated by freeze_values.py (mpmath, 40 digits). Do not edit by hand.

namespace frozen {

// ln Γ(7.25)
inline constexpr double ln_gamma_7_25 = 7.0521854507385394449;
// 1/Γ(-2.5)
inline constexpr double rgamma_minus_2_5 = -1.057855469152043038;
// Γ(3.5)/(Γ(2)Γ(2.5))
inline constexpr double frac_binom_5_2_half = 2.5;
// Γ(4)/Γ(1.9)
inline constexpr double stieltjes_0_3_minus_0_9 = 6.2385248060858184879;
// E_2(4) = cosh 2
inline constexpr double ml_one_2_4 = 3.7621956910836314596;
// E_{1,2}(1) = e - 1
inline constexpr double ml_two_1_2_1 = 1.7182818284590452354;
// E_{1/2,0}(1/4)
inline constexpr double ml_two_half_0_quarter = 0.22596254401848420394;
// E^{-2}_{0.7,1}(0.3)
inline constexpr double ml_three_0_7_1_m2_0_3 = 0.41212544584204520769;
// W_{1,1}(1) = I_0(2)
inline constexpr double wright_1_1_1 = 2.2795853023360672674;
// W_{1/2,1}(-1)
inline constexpr double wright_half_1_m1 = 0.26478660052626588013;
// E_{1/2}(-1) = e erfc(1)
inline constexpr double cole_cole_half = 0.42758357615580700441;
// ψ_{0.6,0.8}(0.5)
inline constexpr double hn_0_6_0_8_0_5 = 0.44753256862824677014;
// _{1/2}H_5(0.7, -0.2)
inline constexpr double fhp_5_half_0_7_m0_2 = 1.9799337827449567486;
// (1 ⊕_{1/2} 1)^3
inline constexpr double oplus_1_1_3_half = 5.0;
// umbral shift (4, 0.3, 0.2, 0.5, 0.6)
inline constexpr double umbral_4 = 9.4400964702578409943;
// identity (ii) sum (6, 0.5, 0.1, 0.2, 0.7)
inline constexpr double identity_ii_6 = 13.213658814849048403;
// identity (ii) oplus form (5, 1.1, 0.3, 0.4, 0.5)
inline constexpr double fhp_oplus_5 = 75.804841788262758251;
// Σ λ^n E^{-n}_{1/2,1}(0.5, 0.5), λ = 0.3
inline constexpr double mlp_ogf = 0.97449418480482297621;
// Σ λ^n/n! E^{-n}_{1/2,1}(1, 0.7), λ = 0.4
inline constexpr double mlp_egf = 0.82183943205161310858;
// case (i) (4, 0.2, 0.5, 1, 0.3, 0.7)
inline constexpr double case_i_4 = 23.055230094029862145;
// case (ii) (5, 0.3, 0.6, 1, 0.4, 0.5)
inline constexpr double case_ii_5 = 36.168557047334424379;
// case (iii) (3, 0.5, 0.5, 1, 0.7, 0.4)
inline constexpr double laguerre_3 = -0.065829573890770317934;
// case (iv) (0.5, 0.5, 0.7, 1, 1, 0.6)
inline constexpr double laguerre_wright = 0.82306639852900840146;
// v for fHP (x = 1.5, α = 0.5, y = 1)
inline constexpr double aux_fhp_v = 1.3305196363105758294;
// h for fHP (λ = 0.2)
inline constexpr double aux_fhp_h = 1.4145732646065820666;
// v for MLP (y = 0.5, α = 0.5, β = 1, x = 1)
inline constexpr double aux_mlp_v = -1.0160648895321298641;
// h for MLP (λ = 0.3)
inline constexpr double aux_mlp_h = 0.73067611415265594484;

}  // namespace frozen
