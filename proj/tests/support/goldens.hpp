#pragma once

// High-precision reference values, computed with mpmath (see make_goldens.py)
// and frozen here.

namespace spheroid::golden {

inline constexpr double kI_11_2_at_2_5 = 0.01501656012182545074097286;
inline constexpr double kI_1_2_at_1 = 0.9376748882454876467172629;
inline constexpr double kI_3_2_at_1 = 0.2935253263474797997886289;
inline constexpr double kRatio_k40_r3 = 0.03609858358751987338566352;

inline constexpr double kF_gamma01_R2 = 0.2552244923455853455419596;
inline constexpr double kFPrime_gamma01_R2 = -0.03825618133678209371785938;

struct ThetaStarGolden {
  double gamma;
  double theta_star;
  double argmax;
};
inline constexpr ThetaStarGolden kThetaStar[] = {
    {0.01, 0.96491292842323871671, 0.42825027084050286884},
    {0.1, 0.8452647815652763952463452, 0.977966072168894031697093},
    {0.5, 0.60460046536995653507, 1.9584237430055493242},
    {1.0, 0.44817457567497580116, 2.8873499720469065028},
    {2.0, 0.28873226954877985965, 4.7263663328663344856},
};

// Default model: sigma_bar = 1, sigma_tilde = 0.3, gamma = 0.1, mu = 1.
struct BranchGolden {
  double radius;
  double c1, c2, c3;
  double lambda0, lambda2, lambda7;
  double gamma_star;
};
inline constexpr BranchGolden kSmaller{0.1429405387816059517318849,
                                       2.4471420226428065855,
                                       4.8799899914074525758,
                                       -0.00040840161665655041849,
                                       -0.23260843159809144881,
                                       0.19970191201586118714,
                                       1.1107575692444922643,
                                       0.0001939993158386818024};
inline constexpr BranchGolden kLarger{8.756887025193093272011017,
                                      0.00065203440286684361164,
                                      -0.87438463371357563998,
                                      -0.68858041679511162184,
                                      0.085953179451672538534,
                                      -0.073112748785990660573,
                                      -0.29860929557731354539,
                                      2.8145859305781555895};

inline constexpr double kCriticalGammaDefault = 1.7448758195223454589;

}  // namespace spheroid::golden
