// Generated by tools/codegen/gen_kernel4_tables.py. Do not edit.
// Each entry is gamma^p * F(x), x = gamma*eta (u = eta - s for kernels),
// F = P0(x) + P1(x) e^{-x} + P2(x) e^{-2x}, with Taylor coefficients of F.
#pragma once

#include <array>

#include "holmc/detail/coef.hpp"

namespace holmc::detail {

inline constexpr double kSeriesSwitch = 1.5;

inline const std::array<Coef, 16> kMu = {{
    /* mu00 */ Coef{0, 0, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {1.0}, {}, {}},
    /* mu01 */ Coef{-1, 1, {0.0, 1.0, 0.0, -0.16666666666666666, 0.0, 0.016666666666666666, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, 0.0, 0.5, -0.3333333333333333, 0.041666666666666664, 0.008333333333333333}, {-1.0}, {}},
    /* mu02 */ Coef{-1, 2, {0.0, 0.0, 0.5, 0.0, -0.08333333333333333, 0.008333333333333333, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 1.0, -0.16666666666666666, -0.041666666666666664}, {-1.0}, {}},
    /* mu03 */ Coef{-1, 3, {0.0, 0.0, 0.0, 0.16666666666666666, -0.041666666666666664, -0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.16666666666666666, -0.041666666666666664, -0.008333333333333333}, {}, {}},
    /* mu10 */ zero_coef(),
    /* mu11 */ Coef{0, 0, {1.0, 0.0, -0.5, 0.0, 0.08333333333333333, -0.008333333333333333, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {0.0, 1.0, -1.0, 0.16666666666666666, 0.041666666666666664}, {1.0}, {}},
    /* mu12 */ Coef{0, 1, {0.0, 1.0, 0.0, -0.3333333333333333, 0.041666666666666664, -0.008333333333333333, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 2.0, -0.5, -0.16666666666666666}, {1.0}, {}},
    /* mu13 */ Coef{0, 2, {0.0, 0.0, 0.5, -0.16666666666666666, -0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.5, -0.16666666666666666, -0.041666666666666664}, {}, {}},
    /* mu20 */ zero_coef(),
    /* mu21 */ Coef{0, 1, {0.0, -1.0, 0.0, 0.3333333333333333, -0.041666666666666664, -0.025, 0.004166666666666667, -0.0007936507936507937, 0.0001240079365079365, -1.6534391534391536e-05, 1.9290123456790124e-06, -2.0041686708353376e-07, 1.878908128908129e-08, -1.6059043836821615e-09, 1.2617820157502697e-10, -9.17659647818378e-12, 6.213320532103601e-13, -3.936040156083729e-14, 2.342881045287934e-15, -1.3153016394598927e-16, 6.98753995963068e-18, -3.523129391410427e-19, 1.690390364565609e-20, -7.736340341261368e-22, 3.384648899301849e-23, -1.4183290625645841e-24, 5.703071405417034e-26, -2.204085567310931e-27, 8.199723092674595e-29, -2.9405903504764064e-30, 1.0178966597802945e-31, -3.4051501163498504e-33, 1.1021133189078757e-34, -3.4549006862315854e-36, 1.0500188360115601e-37, -3.096829746762205e-39, 8.8711268787459e-41, -2.4702564609120444e-42, 6.691871217640987e-44, -1.7648891123448757e-45, 4.534784524775027e-47, -1.1359381143141137e-48, 2.7757886252036613e-50, -6.620843470968781e-52, 1.5423555813052273e-53, -3.511053355816778e-55, 7.81445622671436e-57, -1.7013165461426614e-58},
      {3.0, -3.0, 0.5, 0.3333333333333333, -0.08333333333333333, -0.008333333333333333}, {-3.0, -1.0}, {}},
    /* mu22 */ Coef{0, 0, {1.0, 0.0, -1.0, 0.16666666666666666, 0.125, -0.025, 0.005555555555555556, -0.000992063492063492, 0.00014880952380952382, -1.9290123456790123e-05, 2.204585537918871e-06, -2.2546897546897547e-07, 2.08767569878681e-08, -1.7664948220503776e-09, 1.376489471727567e-10, -9.941312851365761e-12, 6.691268265342339e-13, -4.217185881518281e-14, 2.499073114973796e-15, -1.3975079919261362e-16, 7.398571721961897e-18, -3.7188588020443397e-19, 1.7793582784901146e-20, -8.123157358324437e-22, 3.54582265641146e-23, -1.482798565408429e-24, 5.951031031739514e-26, -2.2959224659488864e-27, 8.527712016381578e-29, -3.0536899793408837e-30, 1.0555965360684537e-31, -3.526762620505202e-33, 1.140117226456423e-34, -3.5700640424393045e-36, 1.0838904113667718e-37, -3.193605676348524e-39, 9.139948905374564e-41, -2.5429110627035748e-42, 6.883067538145015e-44, -1.813913809910011e-45, 4.657346268687866e-47, -1.1658312225855378e-48, 2.8469626925165756e-50, -6.786364557743001e-52, 1.57997401011755e-53, -3.594649864288606e-55, 7.996187766870509e-57, -1.7399828312822674e-58},
      {3.0, -1.0, -1.0, 0.3333333333333333, 0.041666666666666664}, {-2.0, -1.0}, {}},
    /* mu23 */ Coef{0, 1, {0.0, 1.0, -0.5, -0.16666666666666666, 0.08333333333333333, 0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 1.0, -0.5, -0.16666666666666666, 0.08333333333333333, 0.008333333333333333}, {}, {}},
    /* mu30 */ zero_coef(),
    /* mu31 */ Coef{0, 2, {0.0, 0.0, 0.5, -0.16666666666666666, -0.041666666666666664, 0.016666666666666666, 0.001388888888888889, -0.0007936507936507937, 0.0001984126984126984, -3.582451499118166e-05, 5.235890652557319e-06, -6.513548180214847e-07, 7.098097375875153e-08, -6.9053888498332945e-09, 6.079495166796754e-10, -4.8941847883646825e-11, 3.632402772614413e-12, -2.5021969563675136e-13, 1.6087783177643814e-14, -9.700349591016708e-16, 5.507825615238301e-17, -2.9555141005720805e-18, 1.5035577453241469e-19, -7.272159920785686e-21, 3.352414147879926e-22, -1.4763516151240444e-23, 6.223786620694242e-25, -2.5163310226799798e-26, 9.774069926468118e-28, -3.6531180123226126e-29, 1.3157256824567511e-30, -4.572630156241228e-32, 1.5353578649613164e-33, -4.986573323794255e-35, 1.568253938946298e-36, -4.780730921564154e-38, 1.4140038600667708e-39, -4.0613922401465667e-41, 1.1337941805888871e-42, -3.0787510070905055e-44, 8.138099795812482e-46, -2.0955068898268256e-47, 5.259763574424374e-49, -1.2877540551034278e-50, 3.0771874768479902e-52, -7.180940077730029e-54, 1.6374011768068928e-55, -3.6500973171788005e-57},
      {-4.0, 1.0, 1.0, -0.5, 0.041666666666666664, 0.008333333333333333}, {4.0, 3.0, 0.5}, {}},
    /* mu32 */ Coef{0, 1, {0.0, -1.0, 0.5, 0.16666666666666666, -0.08333333333333333, -0.008333333333333333, 0.005555555555555556, -0.0015873015873015873, 0.0003224206349206349, -5.235890652557319e-05, 7.164902998236331e-06, -8.517716851050185e-07, 8.977005504783283e-08, -8.511293233515456e-09, 7.341277182547024e-10, -5.8118444361830606e-11, 4.253734825824773e-12, -2.8958009719758864e-13, 1.8430664222931748e-14, -1.1015651230476601e-15, 6.206579611201369e-17, -3.307827039713123e-18, 1.6725967817807077e-19, -8.045793954911823e-21, 3.690879037810111e-22, -1.618184521380503e-23, 6.794093761235945e-25, -2.736739579411073e-26, 1.0594042235735577e-27, -3.9471770473702535e-29, 1.4175153484347805e-30, -4.9131451678762125e-32, 1.645569196852104e-33, -5.332063392417413e-35, 1.673255822547454e-36, -5.090413896240375e-38, 1.5027151288542296e-39, -4.308417886237771e-41, 1.2007128927652971e-42, -3.255239918324993e-44, 8.591578248289985e-46, -2.209100701258237e-47, 5.53734243694474e-49, -1.3539624898131157e-50, 3.2314230349785127e-52, -7.532045413311706e-54, 1.7155457390740363e-55, -3.8202289717930667e-57},
      {-1.0, -2.0, 1.5, -0.16666666666666666, -0.041666666666666664}, {1.0, 2.0, 0.5}, {}},
    /* mu33 */ Coef{0, 0, {1.0, -1.0, 0.0, 0.16666666666666666, 0.0, -0.016666666666666666, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {0.0, 0.0, -0.5, 0.3333333333333333, -0.041666666666666664, -0.008333333333333333}, {1.0}, {}}
}};

inline const std::array<Coef, 16> kSigma = {{
    /* sigma00 */ Coef{-2, 7, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.007936507936507936, -0.003472222222222222, 0.0010030864197530865, -0.0002314814814814815, 4.56950456950457e-05, -7.991622574955909e-06, 1.2648102925880704e-06, -1.8371546149323928e-07, 2.4733986374198014e-08, -3.109145594264642e-09, 3.6696264666619476e-10, -4.084859960080419e-11, 4.304324615132499e-12, -4.306840129517966e-13, 4.103091293471561e-14, -3.7307591502108815e-15, 3.244463317782056e-16, -2.703868356036616e-17, 2.1631599279661707e-18, -1.6639965501013388e-19, 1.2326010575399394e-20, -8.804335906702506e-22, 6.071971676913759e-23, -4.047986818163801e-24, 2.611606373802423e-25, -1.6322546448945055e-26, 9.89245453533846e-28, -5.819091575152326e-29, 3.325195390192092e-30, -1.847330832652603e-31, 9.9855722413104e-33, -5.255564385713262e-34, 2.695161236502878e-35, -1.3475806216978753e-36, 6.573564017142636e-38, -3.130268581812362e-39, 1.455938875804473e-40, -6.617903982225e-42, 2.941290659068618e-43, -1.278822025750775e-44, 5.441795854411735e-46},
      {-3.0, 2.0, -2.0, 1.3333333333333333, -0.5, 0.1}, {4.0, 0.0, 2.0}, {-1.0}},
    /* sigma01 */ Coef{-1, 6, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.027777777777777776, -0.013888888888888888, 0.0045138888888888885, -0.0011574074074074073, 0.0002513227513227513, -4.794973544973545e-05, 8.221266901822458e-06, -1.286008230452675e-06, 1.855048978064851e-07, -2.4873164754117135e-08, 3.1191824966626554e-09, -3.6763739640723767e-10, 4.089108384375874e-11, -4.306840129517966e-12, 4.308245858145139e-13, -4.10383506523197e-14, 3.731132815449364e-15, -3.2446420272439393e-16, 2.7039499099577133e-17, -2.1631955151317404e-18, 1.6640114276789183e-19, -1.2326070269383509e-20, 8.80435893152495e-22, -6.071980227245702e-23, 4.047989879393755e-24, -2.611607431831209e-25, 1.6322549983308457e-26, -9.892455677758952e-28, 5.819091932836161e-29, -3.325195498774685e-30, 1.847330864642424e-31, -9.985572332855198e-33, 5.255564411180612e-34, -2.6951612433957503e-35, 1.3475806235142403e-36, -6.573564021805961e-38, 3.1302685829796166e-39, -1.4559388760895003e-40, 6.61790398290439e-42, -2.9412906592267824e-43, 1.2788220257867577e-44, -5.441795854491774e-46},
      {1.0, -2.0, 2.0, -1.0, 0.25}, {-2.0, 2.0, -1.0}, {1.0}},
    /* sigma02 */ Coef{-1, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.06666666666666667, -0.041666666666666664, 0.0003968253968253968, 0.0038194444444444443, -0.0018077601410934744, 0.0005539021164021163, -0.0001343294051627385, 2.769510582010582e-05, -5.03418906196684e-06, 8.246319010207899e-07, -1.2350934143262186e-07, 1.70888300228578e-08, -2.2010111636239864e-09, 2.6546810263190335e-10, -3.012746084867315e-11, 3.2299739050687888e-12, -3.2823908284247823e-13, 3.171104174503016e-14, -2.919997413062787e-15, 2.568666041443393e-16, -2.163156059796e-17, 1.7471947658688347e-18, -1.355860518598905e-19, 1.0124983813111619e-20, -7.286365093927525e-22, 5.0599831947158274e-23, -3.395088172843521e-24, 2.2035437329077063e-25, -1.384943622786134e-26, 8.437682745966965e-28, -4.9877930737718026e-29, 2.8633627872243767e-30, -1.5976915576419048e-31, 8.671681233738663e-33, -4.581774101328347e-34, 2.3582660877800853e-35, -1.1832415230366497e-36, 5.790996876230308e-38, -2.7662838639986056e-39, 1.2904912765267578e-40, -5.882581318120683e-42, 2.621585152785327e-43, -1.1427771294256285e-44},
      {-7.5, 4.0, -2.0, 0.3333333333333333, 0.25, -0.1}, {10.0, 2.0, 2.0, 1.0}, {-2.5, -1.0}},
    /* sigma03 */ Coef{-1, 4, {0.0, 0.0, 0.0, 0.0, 0.08333333333333333, -0.08333333333333333, 0.016666666666666666, 0.005158730158730159, -0.0013392857142857143, -0.00035824514991181656, 0.00032958553791887125, -0.0001265131473464807, 3.491011303511304e-05, -7.854478340589452e-06, 1.5225350046778618e-06, -2.6215547875600784e-07, 4.087150922881743e-08, -5.845520071175611e-09, 7.742172243968333e-10, -9.564072832279318e-11, 1.1081765689447578e-11, -1.209910707699359e-12, 1.2495207211982196e-13, -1.2246331773559534e-14, 1.1423073893334365e-15, -1.0166480097908312e-16, 8.652611097323806e-18, -7.056565889588094e-19, 5.524689140692342e-20, -4.15928782249945e-21, 3.0157452226014977e-22, -2.1088702960490783e-23, 1.4241415116861799e-24, -9.29890495057673e-26, 5.877281714960252e-27, -3.599523758039067e-28, 2.1382853596399355e-29, -1.2332181476851565e-30, 6.911067095918891e-32, -3.7664878075447644e-33, 1.9977882659556126e-34, -1.0320495491410834e-35, 5.196245841712055e-37, -2.5515328787928803e-38, 1.2226577604514802e-39, -5.720810331240853e-41, 2.615191042505625e-42, -1.1686256596988261e-43},
      {18.75, -2.0, 0.0, 0.6666666666666666, -0.5, 0.1}, {-22.0, -16.0, -7.0, -3.0, -0.5}, {3.25, 2.5, 0.5}},
    /* sigma10 */ Coef{-1, 6, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.027777777777777776, -0.013888888888888888, 0.0045138888888888885, -0.0011574074074074073, 0.0002513227513227513, -4.794973544973545e-05, 8.221266901822458e-06, -1.286008230452675e-06, 1.855048978064851e-07, -2.4873164754117135e-08, 3.1191824966626554e-09, -3.6763739640723767e-10, 4.089108384375874e-11, -4.306840129517966e-12, 4.308245858145139e-13, -4.10383506523197e-14, 3.731132815449364e-15, -3.2446420272439393e-16, 2.7039499099577133e-17, -2.1631955151317404e-18, 1.6640114276789183e-19, -1.2326070269383509e-20, 8.80435893152495e-22, -6.071980227245702e-23, 4.047989879393755e-24, -2.611607431831209e-25, 1.6322549983308457e-26, -9.892455677758952e-28, 5.819091932836161e-29, -3.325195498774685e-30, 1.847330864642424e-31, -9.985572332855198e-33, 5.255564411180612e-34, -2.6951612433957503e-35, 1.3475806235142403e-36, -6.573564021805961e-38, 3.1302685829796166e-39, -1.4559388760895003e-40, 6.61790398290439e-42, -2.9412906592267824e-43, 1.2788220257867577e-44, -5.441795854491774e-46},
      {1.0, -2.0, 2.0, -1.0, 0.25}, {-2.0, 2.0, -1.0}, {1.0}},
    /* sigma11 */ Coef{0, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.1, -0.05555555555555555, 0.01984126984126984, -0.005555555555555556, 0.0013117283950617284, -0.00027116402116402117, 5.020442520442521e-05, -8.450911228689007e-06, 1.3072061683172794e-06, -1.8729433411973094e-07, 2.5012343134036257e-08, -3.129219399060669e-09, 3.683121461482806e-10, -4.09335680867133e-11, 4.309355643903433e-12, -4.3096515867723116e-13, 4.104578836992379e-14, -3.731506480687848e-15, 3.2448207367058224e-16, -2.704031463878811e-17, 2.16323110229731e-18, -1.6640263052564976e-19, 1.2326129963367623e-20, -8.804381956347395e-22, 6.071988777577644e-23, -4.04799294062371e-24, 2.611608489859995e-25, -1.6322553517671862e-26, 9.892456820179447e-28, -5.819092290519996e-29, 3.325195607357278e-30, -1.8473308966322452e-31, 9.985572424399996e-33, -5.255564436647962e-34, 2.695161250288623e-35, -1.3475806253306054e-36, 6.573564026469285e-38, -3.1302685841468715e-39, 1.4559388763745277e-40, -6.617903983583779e-42, 2.941290659384947e-43, -1.2788220258227406e-44, 5.441795854571814e-46},
      {1.0, 2.0, -2.0, 0.6666666666666666}, {0.0, -4.0}, {-1.0}},
    /* sigma12 */ Coef{0, 4, {0.0, 0.0, 0.0, 0.0, 0.25, -0.16666666666666666, 0.013888888888888888, 0.011507936507936509, -0.006944444444444444, 0.0024250440917107582, -0.0006531084656084656, 0.00014785754369087703, -2.9302616108171664e-05, 5.203772564883676e-06, -8.407368278400025e-07, 1.2490112523181306e-07, -1.719923594923595e-08, 2.2091081605165016e-09, -2.6602039779031257e-10, 3.0162678050069686e-11, -3.2320824980095477e-12, 3.2835808632414366e-13, -3.171739405408437e-14, 2.920319090094177e-15, -2.568820993893478e-16, 2.1632272341271396e-17, -1.7472260087817512e-18, 1.3558736512754102e-19, -1.0125036770203241e-20, 7.286385614724185e-22, -5.059990847790714e-23, 3.395090923718365e-24, -2.203544687185825e-25, 1.3849439426638722e-26, -8.437683783250089e-28, 4.9877933995195813e-29, -2.8633628863928225e-30, 1.59769158693624e-31, -8.671681317780917e-33, 4.581774124764113e-34, -2.358266094137363e-35, 1.1832415247154466e-36, -5.790996880549151e-38, 2.7662838650817092e-39, -1.2904912767917194e-40, 5.882581318753342e-42, -2.6215851529328564e-43, 1.142777129459245e-44},
      {-2.5, -4.0, 2.0, 0.3333333333333333, -0.25}, {0.0, 8.0, 3.0}, {2.5, 1.0}},
    /* sigma13 */ Coef{0, 3, {0.0, 0.0, 0.0, 0.3333333333333333, -0.3333333333333333, 0.08333333333333333, 0.011111111111111112, -0.005158730158730159, -0.000744047619047619, 0.0011298500881834215, -0.0005081569664902999, 0.00015807880391213724, -3.950299957244402e-05, 8.426822662933774e-06, -1.5851652756414661e-06, 2.6827932747244915e-07, -4.141350195831016e-08, 5.889378804343401e-09, -7.774885111043339e-10, 9.586712461748522e-11, -1.1096385267170174e-11, 1.2107957960942457e-12, -1.2500251692701716e-13, 1.2249048157380157e-14, -1.1424460309993022e-15, 1.0167152695337581e-16, -8.652922038695214e-18, 7.056703185751558e-19, -5.524747163244901e-20, 4.1593113359122906e-21, -3.015754375679062e-22, 2.1088737240623452e-23, -1.4241427487133707e-24, 9.298909257501992e-26, -5.877283163579787e-27, 3.5995242292875207e-28, -2.1382855080727057e-29, 1.2332181929998316e-30, -6.911067230131825e-32, 3.7664878461448505e-33, -1.997788276744821e-34, 1.0320495520743147e-35, -5.1962458494742985e-37, 2.551532880793772e-38, -1.2226577609542278e-39, 5.720810332472955e-41, -2.6151910428003248e-42, 1.1686256597676599e-43},
      {9.25, 2.0, 0.0, -1.0, 0.25}, {-6.0, -12.0, -7.0, -1.0}, {-3.25, -2.5, -0.5}},
    /* sigma20 */ Coef{-1, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.06666666666666667, -0.041666666666666664, 0.0003968253968253968, 0.0038194444444444443, -0.0018077601410934744, 0.0005539021164021163, -0.0001343294051627385, 2.769510582010582e-05, -5.03418906196684e-06, 8.246319010207899e-07, -1.2350934143262186e-07, 1.70888300228578e-08, -2.2010111636239864e-09, 2.6546810263190335e-10, -3.012746084867315e-11, 3.2299739050687888e-12, -3.2823908284247823e-13, 3.171104174503016e-14, -2.919997413062787e-15, 2.568666041443393e-16, -2.163156059796e-17, 1.7471947658688347e-18, -1.355860518598905e-19, 1.0124983813111619e-20, -7.286365093927525e-22, 5.0599831947158274e-23, -3.395088172843521e-24, 2.2035437329077063e-25, -1.384943622786134e-26, 8.437682745966965e-28, -4.9877930737718026e-29, 2.8633627872243767e-30, -1.5976915576419048e-31, 8.671681233738663e-33, -4.581774101328347e-34, 2.3582660877800853e-35, -1.1832415230366497e-36, 5.790996876230308e-38, -2.7662838639986056e-39, 1.2904912765267578e-40, -5.882581318120683e-42, 2.621585152785327e-43, -1.1427771294256285e-44},
      {-7.5, 4.0, -2.0, 0.3333333333333333, 0.25, -0.1}, {10.0, 2.0, 2.0, 1.0}, {-2.5, -1.0}},
    /* sigma21 */ Coef{0, 4, {0.0, 0.0, 0.0, 0.0, 0.25, -0.16666666666666666, 0.013888888888888888, 0.011507936507936509, -0.006944444444444444, 0.0024250440917107582, -0.0006531084656084656, 0.00014785754369087703, -2.9302616108171664e-05, 5.203772564883676e-06, -8.407368278400025e-07, 1.2490112523181306e-07, -1.719923594923595e-08, 2.2091081605165016e-09, -2.6602039779031257e-10, 3.0162678050069686e-11, -3.2320824980095477e-12, 3.2835808632414366e-13, -3.171739405408437e-14, 2.920319090094177e-15, -2.568820993893478e-16, 2.1632272341271396e-17, -1.7472260087817512e-18, 1.3558736512754102e-19, -1.0125036770203241e-20, 7.286385614724185e-22, -5.059990847790714e-23, 3.395090923718365e-24, -2.203544687185825e-25, 1.3849439426638722e-26, -8.437683783250089e-28, 4.9877933995195813e-29, -2.8633628863928225e-30, 1.59769158693624e-31, -8.671681317780917e-33, 4.581774124764113e-34, -2.358266094137363e-35, 1.1832415247154466e-36, -5.790996880549151e-38, 2.7662838650817092e-39, -1.2904912767917194e-40, 5.882581318753342e-42, -2.6215851529328564e-43, 1.142777129459245e-44},
      {-2.5, -4.0, 2.0, 0.3333333333333333, -0.25}, {0.0, 8.0, 3.0}, {2.5, 1.0}},
    /* sigma22 */ Coef{0, 3, {0.0, 0.0, 0.0, 0.6666666666666666, -0.5, -0.03333333333333333, 0.1111111111111111, -0.03015873015873016, 0.0020833333333333333, 0.0017195767195767196, -0.0009457671957671958, 0.00030804072470739136, -7.817092886537331e-05, 1.677591955369733e-05, -3.16372340181864e-06, 5.360417066766273e-07, -8.27895328143344e-08, 1.1776227297157892e-08, -1.5548170815293095e-09, 1.9172474618062535e-10, -2.2192237837176368e-11, 2.4215633288615957e-12, -2.500036103674115e-13, 2.4498028080238506e-14, -2.284888941674667e-15, 2.033429174892836e-16, -1.7305838364400637e-17, 1.411340407558065e-18, -1.1049493439607753e-19, 8.318622342026064e-21, -6.031508633131312e-22, 4.2177474072142445e-23, -2.8482854837453345e-24, 1.8597818470735188e-25, -1.1754566313285776e-26, 7.199048454359482e-28, -4.2765710149023784e-29, 2.4664363856436556e-30, -1.3822134459272489e-31, 7.532975692021242e-33, -3.99557655341885e-34, 2.0640991041304424e-35, -1.0392491698903046e-36, 5.103065761576415e-38, -2.4453155219058015e-39, 1.1441620664939727e-40, -5.230382085599242e-42, 2.3372513195350063e-43},
      {2.5, 8.0, 0.0, -1.3333333333333333, 0.0, 0.1}, {4.0, -12.0, -10.0, -2.0}, {-6.5, -5.0, -1.0}},
    /* sigma23 */ Coef{0, 2, {0.0, 0.0, 1.0, -1.0, 0.16666666666666666, 0.16666666666666666, -0.06388888888888888, -0.003968253968253968, 0.005654761904761905, -0.0012235449735449736, -0.00010967813051146385, 0.0001673480840147507, -6.925237828015605e-05, 2.0048110325888103e-05, -4.704083945155374e-06, 9.478965332139935e-07, -1.6913365851031195e-07, 2.7235587301627606e-08, -4.0100074097565845e-09, 5.450294321528325e-10, -6.889375874436394e-11, 8.147173771058153e-12, -9.057993547860432e-13, 9.507195561664361e-14, -9.453903718043468e-15, 8.934112150688187e-16, -8.045552195763916e-17, 6.92111533370478e-18, -5.69973395451744e-19, 4.5023785351591946e-20, -3.417517594041551e-21, 2.49669754891384e-22, -1.7581429852624085e-23, 1.195008762777447e-24, -7.849955428842814e-26, 4.989455985691374e-27, -3.0718803574379124e-28, 1.833850373510345e-29, -1.0625437393179918e-30, 5.980562812486884e-32, -3.272767995661055e-33, 1.7426518232721383e-34, -9.035520267756324e-36, 4.565096346773384e-37, -2.2490119449962769e-38, 1.0810713818508378e-39, -5.073406681930672e-41, 2.3258235482405825e-42},
      {-12.875, -4.0, -2.0, 1.0, 0.25, -0.1}, {4.0, 16.0, 15.0, 5.0, 0.5}, {8.875, 9.75, 3.75, 0.5}},
    /* sigma30 */ Coef{-1, 4, {0.0, 0.0, 0.0, 0.0, 0.08333333333333333, -0.08333333333333333, 0.016666666666666666, 0.005158730158730159, -0.0013392857142857143, -0.00035824514991181656, 0.00032958553791887125, -0.0001265131473464807, 3.491011303511304e-05, -7.854478340589452e-06, 1.5225350046778618e-06, -2.6215547875600784e-07, 4.087150922881743e-08, -5.845520071175611e-09, 7.742172243968333e-10, -9.564072832279318e-11, 1.1081765689447578e-11, -1.209910707699359e-12, 1.2495207211982196e-13, -1.2246331773559534e-14, 1.1423073893334365e-15, -1.0166480097908312e-16, 8.652611097323806e-18, -7.056565889588094e-19, 5.524689140692342e-20, -4.15928782249945e-21, 3.0157452226014977e-22, -2.1088702960490783e-23, 1.4241415116861799e-24, -9.29890495057673e-26, 5.877281714960252e-27, -3.599523758039067e-28, 2.1382853596399355e-29, -1.2332181476851565e-30, 6.911067095918891e-32, -3.7664878075447644e-33, 1.9977882659556126e-34, -1.0320495491410834e-35, 5.196245841712055e-37, -2.5515328787928803e-38, 1.2226577604514802e-39, -5.720810331240853e-41, 2.615191042505625e-42, -1.1686256596988261e-43},
      {18.75, -2.0, 0.0, 0.6666666666666666, -0.5, 0.1}, {-22.0, -16.0, -7.0, -3.0, -0.5}, {3.25, 2.5, 0.5}},
    /* sigma31 */ Coef{0, 3, {0.0, 0.0, 0.0, 0.3333333333333333, -0.3333333333333333, 0.08333333333333333, 0.011111111111111112, -0.005158730158730159, -0.000744047619047619, 0.0011298500881834215, -0.0005081569664902999, 0.00015807880391213724, -3.950299957244402e-05, 8.426822662933774e-06, -1.5851652756414661e-06, 2.6827932747244915e-07, -4.141350195831016e-08, 5.889378804343401e-09, -7.774885111043339e-10, 9.586712461748522e-11, -1.1096385267170174e-11, 1.2107957960942457e-12, -1.2500251692701716e-13, 1.2249048157380157e-14, -1.1424460309993022e-15, 1.0167152695337581e-16, -8.652922038695214e-18, 7.056703185751558e-19, -5.524747163244901e-20, 4.1593113359122906e-21, -3.015754375679062e-22, 2.1088737240623452e-23, -1.4241427487133707e-24, 9.298909257501992e-26, -5.877283163579787e-27, 3.5995242292875207e-28, -2.1382855080727057e-29, 1.2332181929998316e-30, -6.911067230131825e-32, 3.7664878461448505e-33, -1.997788276744821e-34, 1.0320495520743147e-35, -5.1962458494742985e-37, 2.551532880793772e-38, -1.2226577609542278e-39, 5.720810332472955e-41, -2.6151910428003248e-42, 1.1686256597676599e-43},
      {9.25, 2.0, 0.0, -1.0, 0.25}, {-6.0, -12.0, -7.0, -1.0}, {-3.25, -2.5, -0.5}},
    /* sigma32 */ Coef{0, 2, {0.0, 0.0, 1.0, -1.0, 0.16666666666666666, 0.16666666666666666, -0.06388888888888888, -0.003968253968253968, 0.005654761904761905, -0.0012235449735449736, -0.00010967813051146385, 0.0001673480840147507, -6.925237828015605e-05, 2.0048110325888103e-05, -4.704083945155374e-06, 9.478965332139935e-07, -1.6913365851031195e-07, 2.7235587301627606e-08, -4.0100074097565845e-09, 5.450294321528325e-10, -6.889375874436394e-11, 8.147173771058153e-12, -9.057993547860432e-13, 9.507195561664361e-14, -9.453903718043468e-15, 8.934112150688187e-16, -8.045552195763916e-17, 6.92111533370478e-18, -5.69973395451744e-19, 4.5023785351591946e-20, -3.417517594041551e-21, 2.49669754891384e-22, -1.7581429852624085e-23, 1.195008762777447e-24, -7.849955428842814e-26, 4.989455985691374e-27, -3.0718803574379124e-28, 1.833850373510345e-29, -1.0625437393179918e-30, 5.980562812486884e-32, -3.272767995661055e-33, 1.7426518232721383e-34, -9.035520267756324e-36, 4.565096346773384e-37, -2.2490119449962769e-38, 1.0810713818508378e-39, -5.073406681930672e-41, 2.3258235482405825e-42},
      {-12.875, -4.0, -2.0, 1.0, 0.25, -0.1}, {4.0, 16.0, 15.0, 5.0, 0.5}, {8.875, 9.75, 3.75, 0.5}},
    /* sigma33 */ Coef{0, 1, {0.0, 2.0, -2.0, 0.6666666666666666, 0.16666666666666666, -0.13333333333333333, -0.011111111111111112, 0.02142857142857143, -0.004365079365079365, -0.00028659611992945327, 0.00030202821869488536, -3.497274330607664e-05, -2.2062556784779008e-05, 1.4048451548451548e-05, -4.87093741061995e-06, 1.2766695141033765e-06, -2.7807075591467127e-07, 5.2612284049998025e-08, -8.871985705736182e-09, 1.3559992753150279e-09, -1.9010287074678603e-10, 2.466634566582381e-11, -2.983047221534724e-12, 3.381605718539797e-13, -3.6102710622551946e-14, 3.644529147247633e-15, -3.49072335562804e-16, 3.181687833484764e-17, -2.7669995477537444e-18, 2.3013606504865435e-19, -1.834399002668309e-20, 1.4039682335951379e-21, -1.0335237428040763e-22, 7.329321462607983e-24, -5.014311897285547e-25, 3.3138899658113304e-26, -2.118241980211371e-27, 1.3110432518676554e-28, -7.86541204851942e-30, 4.578438865557647e-31, -2.588247573403168e-32, 1.4222070112045236e-33, -7.602248540627321e-35, 3.9561863104199785e-36, -2.005770884135144e-37, 9.914098127265651e-39, -4.780508482224561e-40, 2.250148574645799e-41},
      {12.875, 2.0, 2.0, 0.0, -0.5, 0.1}, {0.0, -8.0, -12.0, -6.0, -1.0}, {-12.875, -17.75, -9.75, -2.5, -0.25}}
}};

inline const std::array<Coef, 4> kKernel = {{
    /* kernel0 */ Coef{-1, 3, {0.0, 0.0, 0.0, 0.16666666666666666, -0.041666666666666664, 0.008333333333333333, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 0.5}, {-1.0}, {}},
    /* kernel1 */ Coef{0, 2, {0.0, 0.0, 0.5, -0.16666666666666666, 0.041666666666666664, -0.008333333333333333, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 1.0}, {1.0}, {}},
    /* kernel2 */ Coef{0, 1, {0.0, 1.0, -0.5, -0.16666666666666666, 0.08333333333333333, -0.025, 0.005555555555555556, -0.000992063492063492, 0.00014880952380952382, -1.9290123456790123e-05, 2.204585537918871e-06, -2.2546897546897547e-07, 2.08767569878681e-08, -1.7664948220503776e-09, 1.376489471727567e-10, -9.941312851365761e-12, 6.691268265342339e-13, -4.217185881518281e-14, 2.499073114973796e-15, -1.3975079919261362e-16, 7.398571721961897e-18, -3.7188588020443397e-19, 1.7793582784901146e-20, -8.123157358324437e-22, 3.54582265641146e-23, -1.482798565408429e-24, 5.951031031739514e-26, -2.2959224659488864e-27, 8.527712016381578e-29, -3.0536899793408837e-30, 1.0555965360684537e-31, -3.526762620505202e-33, 1.140117226456423e-34, -3.5700640424393045e-36, 1.0838904113667718e-37, -3.193605676348524e-39, 9.139948905374564e-41, -2.5429110627035748e-42, 6.883067538145015e-44, -1.813913809910011e-45, 4.657346268687866e-47, -1.1658312225855378e-48, 2.8469626925165756e-50, -6.786364557743001e-52, 1.57997401011755e-53, -3.594649864288606e-55, 7.996187766870509e-57, -1.7399828312822674e-58},
      {2.0, 0.0, -0.5}, {-2.0, -1.0}, {}},
    /* kernel3 */ Coef{0, 0, {1.0, -1.0, 0.0, 0.16666666666666666, 0.0, -0.016666666666666666, 0.006944444444444444, -0.0017857142857142857, 0.00034722222222222224, -5.511463844797178e-05, 7.4404761904761905e-06, -8.768237934904602e-07, 9.185773074661964e-08, -8.671883671883672e-09, 7.455984638524321e-10, -5.888316073501259e-11, 4.301529599148647e-12, -2.9239155445193414e-13, 1.858685629261761e-14, -1.1097857582942845e-15, 6.24768278743449e-17, -3.3273999807765145e-18, 1.6814935731731584e-19, -8.08447565661813e-21, 3.7069964135210724e-22, -1.6246314716648872e-23, 6.818889723868193e-25, -2.745923269274868e-26, 1.0626841128106275e-27, -3.958487010256701e-29, 1.4212853360635964e-30, -4.925306418291748e-32, 1.649369587606959e-33, -5.343579728038185e-35, 1.6766429800829753e-36, -5.100091489199007e-38, 1.5054033491205165e-39, -4.3156833464169246e-41, 1.2026248559703373e-42, -3.260142388081506e-44, 8.60383442268127e-46, -2.2120900120853794e-47, 5.544459843676031e-49, -1.3556177006808578e-50, 3.2351848778597453e-52, -7.540405064158889e-54, 1.7173630544755976e-55, -3.8240956003070274e-57},
      {-1.0, -1.0, 0.5}, {2.0, 2.0, 0.5}, {}}
}};

inline const std::array<Coef, 60> kQuad = {{
    /* quad m0 theta a^0 */ Coef{0, 0, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {1.0}, {}, {}},
    /* quad m0 theta a^1 */ Coef{-2, 2, {0.0, 0.0, -0.5, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, -0.5, 0.0, 0.041666666666666664}, {}, {}},
    /* quad m0 theta a^2 */ Coef{-4, 4, {0.0, 0.0, 0.0, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.041666666666666664}, {}, {}},
    /* quad m0 v1 a^0 */ Coef{-1, 1, {0.0, 1.0, 0.0, -0.16666666666666666, 0.0, 0.016666666666666666, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, 0.0, 0.5, -0.3333333333333333, 0.041666666666666664, 0.008333333333333333}, {-1.0}, {}},
    /* quad m0 v1 a^1 */ Coef{-3, 3, {0.0, 0.0, 0.0, -0.16666666666666666, 0.0, 0.016666666666666666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, -0.16666666666666666, 0.0, 0.016666666666666666}, {}, {}},
    /* quad m0 v1 a^2 */ Coef{-5, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333}, {}, {}},
    /* quad m0 v2 a^0 */ Coef{-1, 2, {0.0, 0.0, 0.5, 0.0, -0.08333333333333333, 0.008333333333333333, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 1.0, -0.16666666666666666, -0.041666666666666664}, {-1.0}, {}},
    /* quad m0 v2 a^1 */ Coef{-3, 4, {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, -0.041666666666666664}, {}, {}},
    /* quad m0 v2 a^2 */ zero_coef(),
    /* quad m0 v3 a^0 */ Coef{-1, 3, {0.0, 0.0, 0.0, 0.16666666666666666, -0.041666666666666664, -0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.16666666666666666, -0.041666666666666664, -0.008333333333333333}, {}, {}},
    /* quad m0 v3 a^1 */ Coef{-3, 5, {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333}, {}, {}},
    /* quad m0 v3 a^2 */ zero_coef(),
    /* quad m0 b a^0 */ Coef{-2, 2, {0.0, 0.0, -0.5, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, -0.5, 0.0, 0.041666666666666664}, {}, {}},
    /* quad m0 b a^1 */ Coef{-4, 4, {0.0, 0.0, 0.0, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.041666666666666664}, {}, {}},
    /* quad m0 b a^2 */ zero_coef(),
    /* quad m1 theta a^0 */ zero_coef(),
    /* quad m1 theta a^1 */ Coef{-1, 1, {0.0, -1.0, 0.0, 0.16666666666666666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, -1.0, 0.0, 0.16666666666666666}, {}, {}},
    /* quad m1 theta a^2 */ Coef{-3, 3, {0.0, 0.0, 0.0, 0.16666666666666666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.16666666666666666}, {}, {}},
    /* quad m1 v1 a^0 */ Coef{0, 0, {1.0, 0.0, -0.5, 0.0, 0.08333333333333333, -0.008333333333333333, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {0.0, 1.0, -1.0, 0.16666666666666666, 0.041666666666666664}, {1.0}, {}},
    /* quad m1 v1 a^1 */ Coef{-2, 2, {0.0, 0.0, -0.5, 0.0, 0.08333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, -0.5, 0.0, 0.08333333333333333}, {}, {}},
    /* quad m1 v1 a^2 */ Coef{-4, 4, {0.0, 0.0, 0.0, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.041666666666666664}, {}, {}},
    /* quad m1 v2 a^0 */ Coef{0, 1, {0.0, 1.0, 0.0, -0.3333333333333333, 0.041666666666666664, -0.008333333333333333, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 2.0, -0.5, -0.16666666666666666}, {1.0}, {}},
    /* quad m1 v2 a^1 */ Coef{-2, 3, {0.0, 0.0, 0.0, -0.16666666666666666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, -0.16666666666666666}, {}, {}},
    /* quad m1 v2 a^2 */ zero_coef(),
    /* quad m1 v3 a^0 */ Coef{0, 2, {0.0, 0.0, 0.5, -0.16666666666666666, -0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.5, -0.16666666666666666, -0.041666666666666664}, {}, {}},
    /* quad m1 v3 a^1 */ Coef{-2, 4, {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, -0.041666666666666664}, {}, {}},
    /* quad m1 v3 a^2 */ zero_coef(),
    /* quad m1 b a^0 */ Coef{-1, 1, {0.0, -1.0, 0.0, 0.16666666666666666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, -1.0, 0.0, 0.16666666666666666}, {}, {}},
    /* quad m1 b a^1 */ Coef{-3, 3, {0.0, 0.0, 0.0, 0.16666666666666666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.16666666666666666}, {}, {}},
    /* quad m1 b a^2 */ zero_coef(),
    /* quad m2 theta a^0 */ zero_coef(),
    /* quad m2 theta a^1 */ Coef{-1, 2, {0.0, 0.0, 0.5, 0.0, -0.08333333333333333, 0.008333333333333333, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 1.0, -0.16666666666666666, -0.041666666666666664}, {-1.0}, {}},
    /* quad m2 theta a^2 */ Coef{-3, 4, {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, -0.041666666666666664}, {}, {}},
    /* quad m2 v1 a^0 */ Coef{0, 1, {0.0, -1.0, 0.0, 0.3333333333333333, -0.041666666666666664, -0.025, 0.004166666666666667, -0.0007936507936507937, 0.0001240079365079365, -1.6534391534391536e-05, 1.9290123456790124e-06, -2.0041686708353376e-07, 1.878908128908129e-08, -1.6059043836821615e-09, 1.2617820157502697e-10, -9.17659647818378e-12, 6.213320532103601e-13, -3.936040156083729e-14, 2.342881045287934e-15, -1.3153016394598927e-16, 6.98753995963068e-18, -3.523129391410427e-19, 1.690390364565609e-20, -7.736340341261368e-22, 3.384648899301849e-23, -1.4183290625645841e-24, 5.703071405417034e-26, -2.204085567310931e-27, 8.199723092674595e-29, -2.9405903504764064e-30, 1.0178966597802945e-31, -3.4051501163498504e-33, 1.1021133189078757e-34, -3.4549006862315854e-36, 1.0500188360115601e-37, -3.096829746762205e-39, 8.8711268787459e-41, -2.4702564609120444e-42, 6.691871217640987e-44, -1.7648891123448757e-45, 4.534784524775027e-47, -1.1359381143141137e-48, 2.7757886252036613e-50, -6.620843470968781e-52, 1.5423555813052273e-53, -3.511053355816778e-55, 7.81445622671436e-57, -1.7013165461426614e-58},
      {3.0, -3.0, 0.5, 0.3333333333333333, -0.08333333333333333, -0.008333333333333333}, {-3.0, -1.0}, {}},
    /* quad m2 v1 a^1 */ Coef{-2, 3, {0.0, 0.0, 0.0, 0.16666666666666666, 0.0, -0.025, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 1.0, -0.5, 0.3333333333333333, -0.041666666666666664, -0.016666666666666666}, {1.0}, {}},
    /* quad m2 v1 a^2 */ Coef{-4, 5, {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333}, {}, {}},
    /* quad m2 v2 a^0 */ Coef{0, 0, {1.0, 0.0, -1.0, 0.16666666666666666, 0.125, -0.025, 0.005555555555555556, -0.000992063492063492, 0.00014880952380952382, -1.9290123456790123e-05, 2.204585537918871e-06, -2.2546897546897547e-07, 2.08767569878681e-08, -1.7664948220503776e-09, 1.376489471727567e-10, -9.941312851365761e-12, 6.691268265342339e-13, -4.217185881518281e-14, 2.499073114973796e-15, -1.3975079919261362e-16, 7.398571721961897e-18, -3.7188588020443397e-19, 1.7793582784901146e-20, -8.123157358324437e-22, 3.54582265641146e-23, -1.482798565408429e-24, 5.951031031739514e-26, -2.2959224659488864e-27, 8.527712016381578e-29, -3.0536899793408837e-30, 1.0555965360684537e-31, -3.526762620505202e-33, 1.140117226456423e-34, -3.5700640424393045e-36, 1.0838904113667718e-37, -3.193605676348524e-39, 9.139948905374564e-41, -2.5429110627035748e-42, 6.883067538145015e-44, -1.813913809910011e-45, 4.657346268687866e-47, -1.1658312225855378e-48, 2.8469626925165756e-50, -6.786364557743001e-52, 1.57997401011755e-53, -3.594649864288606e-55, 7.996187766870509e-57, -1.7399828312822674e-58},
      {3.0, -1.0, -1.0, 0.3333333333333333, 0.041666666666666664}, {-2.0, -1.0}, {}},
    /* quad m2 v2 a^1 */ Coef{-2, 4, {0.0, 0.0, 0.0, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.041666666666666664}, {}, {}},
    /* quad m2 v2 a^2 */ zero_coef(),
    /* quad m2 v3 a^0 */ Coef{0, 1, {0.0, 1.0, -0.5, -0.16666666666666666, 0.08333333333333333, 0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 1.0, -0.5, -0.16666666666666666, 0.08333333333333333, 0.008333333333333333}, {}, {}},
    /* quad m2 v3 a^1 */ Coef{-2, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333}, {}, {}},
    /* quad m2 v3 a^2 */ zero_coef(),
    /* quad m2 b a^0 */ Coef{-1, 2, {0.0, 0.0, 0.5, 0.0, -0.08333333333333333, 0.008333333333333333, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 1.0, -0.16666666666666666, -0.041666666666666664}, {-1.0}, {}},
    /* quad m2 b a^1 */ Coef{-3, 4, {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, -0.041666666666666664}, {}, {}},
    /* quad m2 b a^2 */ zero_coef(),
    /* quad m3 theta a^0 */ zero_coef(),
    /* quad m3 theta a^1 */ Coef{-1, 3, {0.0, 0.0, 0.0, -0.16666666666666666, 0.041666666666666664, 0.008333333333333333, -0.002777777777777778, 0.0005952380952380953, -9.92063492063492e-05, 1.3778659611992945e-05, -1.6534391534391535e-06, 1.7536475869809203e-07, -1.670140559029448e-08, 1.4453139453139454e-09, -1.1470745597729724e-10, 8.411880105001798e-12, -5.735372798864862e-13, 3.654894430649177e-14, -2.186688975602072e-15, 1.2330952869936495e-16, -6.576508197299464e-18, 3.3273999807765146e-19, -1.6014224506411032e-20, 7.3495233241983e-22, -3.223475142192237e-23, 1.3538595597207395e-24, -5.455111779094555e-26, 2.1122486686729755e-27, -7.871734168967611e-29, 2.8274907216119292e-30, -9.801967834921354e-32, 3.2835376121944986e-33, -1.0641094113593283e-34, 3.3397373300238655e-36, -1.0161472606563485e-37, 3.000053817175886e-39, -8.602304852117236e-41, 2.3976018591205136e-42, -6.500674897136959e-44, 1.71586441477974e-45, -4.412222780862189e-47, 1.1060450060426897e-48, -2.704614557890747e-50, 6.455322384194561e-52, -1.5047371524929047e-53, 3.42745684734495e-55, -7.632724686558213e-57, 1.6626502610030554e-58},
      {-4.0, 3.0, -1.0, 0.0, 0.041666666666666664}, {4.0, 1.0}, {}},
    /* quad m3 theta a^2 */ Coef{-3, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 0.5, -0.16666666666666666, 0.041666666666666664}, {-1.0}, {}},
    /* quad m3 v1 a^0 */ Coef{0, 2, {0.0, 0.0, 0.5, -0.16666666666666666, -0.041666666666666664, 0.016666666666666666, 0.001388888888888889, -0.0007936507936507937, 0.0001984126984126984, -3.582451499118166e-05, 5.235890652557319e-06, -6.513548180214847e-07, 7.098097375875153e-08, -6.9053888498332945e-09, 6.079495166796754e-10, -4.8941847883646825e-11, 3.632402772614413e-12, -2.5021969563675136e-13, 1.6087783177643814e-14, -9.700349591016708e-16, 5.507825615238301e-17, -2.9555141005720805e-18, 1.5035577453241469e-19, -7.272159920785686e-21, 3.352414147879926e-22, -1.4763516151240444e-23, 6.223786620694242e-25, -2.5163310226799798e-26, 9.774069926468118e-28, -3.6531180123226126e-29, 1.3157256824567511e-30, -4.572630156241228e-32, 1.5353578649613164e-33, -4.986573323794255e-35, 1.568253938946298e-36, -4.780730921564154e-38, 1.4140038600667708e-39, -4.0613922401465667e-41, 1.1337941805888871e-42, -3.0787510070905055e-44, 8.138099795812482e-46, -2.0955068898268256e-47, 5.259763574424374e-49, -1.2877540551034278e-50, 3.0771874768479902e-52, -7.180940077730029e-54, 1.6374011768068928e-55, -3.6500973171788005e-57},
      {-4.0, 1.0, 1.0, -0.5, 0.041666666666666664, 0.008333333333333333}, {4.0, 3.0, 0.5}, {}},
    /* quad m3 v1 a^1 */ Coef{-2, 4, {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.008333333333333333, 0.002777777777777778, -0.0005952380952380953, 9.92063492063492e-05, -1.3778659611992945e-05, 1.6534391534391535e-06, -1.7536475869809203e-07, 1.670140559029448e-08, -1.4453139453139454e-09, 1.1470745597729724e-10, -8.411880105001798e-12, 5.735372798864862e-13, -3.654894430649177e-14, 2.186688975602072e-15, -1.2330952869936495e-16, 6.576508197299464e-18, -3.3273999807765146e-19, 1.6014224506411032e-20, -7.3495233241983e-22, 3.223475142192237e-23, -1.3538595597207395e-24, 5.455111779094555e-26, -2.1122486686729755e-27, 7.871734168967611e-29, -2.8274907216119292e-30, 9.801967834921354e-32, -3.2835376121944986e-33, 1.0641094113593283e-34, -3.3397373300238655e-36, 1.0161472606563485e-37, -3.000053817175886e-39, 8.602304852117236e-41, -2.3976018591205136e-42, 6.500674897136959e-44, -1.71586441477974e-45, 4.412222780862189e-47, -1.1060450060426897e-48, 2.704614557890747e-50, -6.455322384194561e-52, 1.5047371524929047e-53, -3.42745684734495e-55, 7.632724686558213e-57, -1.6626502610030554e-58},
      {4.0, -3.0, 1.0, -0.16666666666666666, -0.041666666666666664, 0.016666666666666666}, {-4.0, -1.0}, {}},
    /* quad m3 v1 a^2 */ Coef{-4, 6, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 1.0, -0.5, 0.16666666666666666, -0.041666666666666664, 0.008333333333333333}, {1.0}, {}},
    /* quad m3 v2 a^0 */ Coef{0, 1, {0.0, -1.0, 0.5, 0.16666666666666666, -0.08333333333333333, -0.008333333333333333, 0.005555555555555556, -0.0015873015873015873, 0.0003224206349206349, -5.235890652557319e-05, 7.164902998236331e-06, -8.517716851050185e-07, 8.977005504783283e-08, -8.511293233515456e-09, 7.341277182547024e-10, -5.8118444361830606e-11, 4.253734825824773e-12, -2.8958009719758864e-13, 1.8430664222931748e-14, -1.1015651230476601e-15, 6.206579611201369e-17, -3.307827039713123e-18, 1.6725967817807077e-19, -8.045793954911823e-21, 3.690879037810111e-22, -1.618184521380503e-23, 6.794093761235945e-25, -2.736739579411073e-26, 1.0594042235735577e-27, -3.9471770473702535e-29, 1.4175153484347805e-30, -4.9131451678762125e-32, 1.645569196852104e-33, -5.332063392417413e-35, 1.673255822547454e-36, -5.090413896240375e-38, 1.5027151288542296e-39, -4.308417886237771e-41, 1.2007128927652971e-42, -3.255239918324993e-44, 8.591578248289985e-46, -2.209100701258237e-47, 5.53734243694474e-49, -1.3539624898131157e-50, 3.2314230349785127e-52, -7.532045413311706e-54, 1.7155457390740363e-55, -3.8202289717930667e-57},
      {-1.0, -2.0, 1.5, -0.16666666666666666, -0.041666666666666664}, {1.0, 2.0, 0.5}, {}},
    /* quad m3 v2 a^1 */ Coef{-2, 5, {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 1.0, -0.5, 0.16666666666666666, -0.041666666666666664}, {1.0}, {}},
    /* quad m3 v2 a^2 */ zero_coef(),
    /* quad m3 v3 a^0 */ Coef{0, 0, {1.0, -1.0, 0.0, 0.16666666666666666, 0.0, -0.016666666666666666, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {0.0, 0.0, -0.5, 0.3333333333333333, -0.041666666666666664, -0.008333333333333333}, {1.0}, {}},
    /* quad m3 v3 a^1 */ Coef{-2, 6, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 0.5, -0.16666666666666666, 0.041666666666666664, -0.008333333333333333}, {-1.0}, {}},
    /* quad m3 v3 a^2 */ zero_coef(),
    /* quad m3 b a^0 */ Coef{-1, 3, {0.0, 0.0, 0.0, -0.16666666666666666, 0.041666666666666664, 0.008333333333333333, -0.002777777777777778, 0.0005952380952380953, -9.92063492063492e-05, 1.3778659611992945e-05, -1.6534391534391535e-06, 1.7536475869809203e-07, -1.670140559029448e-08, 1.4453139453139454e-09, -1.1470745597729724e-10, 8.411880105001798e-12, -5.735372798864862e-13, 3.654894430649177e-14, -2.186688975602072e-15, 1.2330952869936495e-16, -6.576508197299464e-18, 3.3273999807765146e-19, -1.6014224506411032e-20, 7.3495233241983e-22, -3.223475142192237e-23, 1.3538595597207395e-24, -5.455111779094555e-26, 2.1122486686729755e-27, -7.871734168967611e-29, 2.8274907216119292e-30, -9.801967834921354e-32, 3.2835376121944986e-33, -1.0641094113593283e-34, 3.3397373300238655e-36, -1.0161472606563485e-37, 3.000053817175886e-39, -8.602304852117236e-41, 2.3976018591205136e-42, -6.500674897136959e-44, 1.71586441477974e-45, -4.412222780862189e-47, 1.1060450060426897e-48, -2.704614557890747e-50, 6.455322384194561e-52, -1.5047371524929047e-53, 3.42745684734495e-55, -7.632724686558213e-57, 1.6626502610030554e-58},
      {-4.0, 3.0, -1.0, 0.0, 0.041666666666666664}, {4.0, 1.0}, {}},
    /* quad m3 b a^1 */ Coef{-3, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 0.5, -0.16666666666666666, 0.041666666666666664}, {-1.0}, {}},
    /* quad m3 b a^2 */ zero_coef()
}};

inline const std::array<Coef, 96> kLogistic = {{
    /* logistic m0 theta lambda^0 */ Coef{0, 0, {1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {1.0}, {}, {}},
    /* logistic m0 theta lambda^1 */ Coef{-2, 2, {0.0, 0.0, -0.5, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, -0.5, 0.0, 0.041666666666666664}, {}, {}},
    /* logistic m0 theta lambda^2 */ Coef{-4, 4, {0.0, 0.0, 0.0, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.041666666666666664}, {}, {}},
    /* logistic m0 v1 lambda^0 */ Coef{-1, 1, {0.0, 1.0, 0.0, -0.16666666666666666, 0.0, 0.016666666666666666, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, 0.0, 0.5, -0.3333333333333333, 0.041666666666666664, 0.008333333333333333}, {-1.0}, {}},
    /* logistic m0 v1 lambda^1 */ Coef{-3, 3, {0.0, 0.0, 0.0, -0.16666666666666666, 0.0, 0.016666666666666666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, -0.16666666666666666, 0.0, 0.016666666666666666}, {}, {}},
    /* logistic m0 v1 lambda^2 */ Coef{-5, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333}, {}, {}},
    /* logistic m0 v2 lambda^0 */ Coef{-1, 2, {0.0, 0.0, 0.5, 0.0, -0.08333333333333333, 0.008333333333333333, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 1.0, -0.16666666666666666, -0.041666666666666664}, {-1.0}, {}},
    /* logistic m0 v2 lambda^1 */ Coef{-3, 4, {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, -0.041666666666666664}, {}, {}},
    /* logistic m0 v2 lambda^2 */ zero_coef(),
    /* logistic m0 v3 lambda^0 */ Coef{-1, 3, {0.0, 0.0, 0.0, 0.16666666666666666, -0.041666666666666664, -0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.16666666666666666, -0.041666666666666664, -0.008333333333333333}, {}, {}},
    /* logistic m0 v3 lambda^1 */ Coef{-3, 5, {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333}, {}, {}},
    /* logistic m0 v3 lambda^2 */ zero_coef(),
    /* logistic m0 M0 lambda^0 */ Coef{-2, 2, {0.0, 0.0, -0.5, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, -0.5, 0.0, 0.041666666666666664}, {}, {}},
    /* logistic m0 M0 lambda^1 */ Coef{-4, 4, {0.0, 0.0, 0.0, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.041666666666666664}, {}, {}},
    /* logistic m0 M0 lambda^2 */ zero_coef(),
    /* logistic m0 M1 lambda^0 */ Coef{-3, 3, {0.0, 0.0, 0.0, -0.16666666666666666, 0.0, 0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, -0.16666666666666666, 0.0, 0.008333333333333333}, {}, {}},
    /* logistic m0 M1 lambda^1 */ Coef{-5, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333}, {}, {}},
    /* logistic m0 M1 lambda^2 */ zero_coef(),
    /* logistic m0 M2 lambda^0 */ Coef{-4, 4, {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.0, 0.001388888888888889, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.0, 0.001388888888888889}, {}, {}},
    /* logistic m0 M2 lambda^1 */ Coef{-6, 6, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.001388888888888889, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.001388888888888889}, {}, {}},
    /* logistic m0 M2 lambda^2 */ zero_coef(),
    /* logistic m0 M3 lambda^0 */ Coef{-5, 5, {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333, 0.0, 0.0001984126984126984, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333, 0.0, 0.0001984126984126984}, {}, {}},
    /* logistic m0 M3 lambda^1 */ Coef{-7, 7, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0001984126984126984, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0001984126984126984}, {}, {}},
    /* logistic m0 M3 lambda^2 */ zero_coef(),
    /* logistic m1 theta lambda^0 */ zero_coef(),
    /* logistic m1 theta lambda^1 */ Coef{-1, 1, {0.0, -1.0, 0.0, 0.16666666666666666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, -1.0, 0.0, 0.16666666666666666}, {}, {}},
    /* logistic m1 theta lambda^2 */ Coef{-3, 3, {0.0, 0.0, 0.0, 0.16666666666666666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.16666666666666666}, {}, {}},
    /* logistic m1 v1 lambda^0 */ Coef{0, 0, {1.0, 0.0, -0.5, 0.0, 0.08333333333333333, -0.008333333333333333, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {0.0, 1.0, -1.0, 0.16666666666666666, 0.041666666666666664}, {1.0}, {}},
    /* logistic m1 v1 lambda^1 */ Coef{-2, 2, {0.0, 0.0, -0.5, 0.0, 0.08333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, -0.5, 0.0, 0.08333333333333333}, {}, {}},
    /* logistic m1 v1 lambda^2 */ Coef{-4, 4, {0.0, 0.0, 0.0, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.041666666666666664}, {}, {}},
    /* logistic m1 v2 lambda^0 */ Coef{0, 1, {0.0, 1.0, 0.0, -0.3333333333333333, 0.041666666666666664, -0.008333333333333333, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 2.0, -0.5, -0.16666666666666666}, {1.0}, {}},
    /* logistic m1 v2 lambda^1 */ Coef{-2, 3, {0.0, 0.0, 0.0, -0.16666666666666666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, -0.16666666666666666}, {}, {}},
    /* logistic m1 v2 lambda^2 */ zero_coef(),
    /* logistic m1 v3 lambda^0 */ Coef{0, 2, {0.0, 0.0, 0.5, -0.16666666666666666, -0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.5, -0.16666666666666666, -0.041666666666666664}, {}, {}},
    /* logistic m1 v3 lambda^1 */ Coef{-2, 4, {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, -0.041666666666666664}, {}, {}},
    /* logistic m1 v3 lambda^2 */ zero_coef(),
    /* logistic m1 M0 lambda^0 */ Coef{-1, 1, {0.0, -1.0, 0.0, 0.16666666666666666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, -1.0, 0.0, 0.16666666666666666}, {}, {}},
    /* logistic m1 M0 lambda^1 */ Coef{-3, 3, {0.0, 0.0, 0.0, 0.16666666666666666, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.16666666666666666}, {}, {}},
    /* logistic m1 M0 lambda^2 */ zero_coef(),
    /* logistic m1 M1 lambda^0 */ Coef{-2, 2, {0.0, 0.0, -0.5, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, -0.5, 0.0, 0.041666666666666664}, {}, {}},
    /* logistic m1 M1 lambda^1 */ Coef{-4, 4, {0.0, 0.0, 0.0, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.041666666666666664}, {}, {}},
    /* logistic m1 M1 lambda^2 */ zero_coef(),
    /* logistic m1 M2 lambda^0 */ Coef{-3, 3, {0.0, 0.0, 0.0, -0.16666666666666666, 0.0, 0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, -0.16666666666666666, 0.0, 0.008333333333333333}, {}, {}},
    /* logistic m1 M2 lambda^1 */ Coef{-5, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333}, {}, {}},
    /* logistic m1 M2 lambda^2 */ zero_coef(),
    /* logistic m1 M3 lambda^0 */ Coef{-4, 4, {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.0, 0.001388888888888889, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.0, 0.001388888888888889}, {}, {}},
    /* logistic m1 M3 lambda^1 */ Coef{-6, 6, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.001388888888888889, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.001388888888888889}, {}, {}},
    /* logistic m1 M3 lambda^2 */ zero_coef(),
    /* logistic m2 theta lambda^0 */ zero_coef(),
    /* logistic m2 theta lambda^1 */ Coef{-1, 2, {0.0, 0.0, 0.5, 0.0, -0.08333333333333333, 0.008333333333333333, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 1.0, -0.16666666666666666, -0.041666666666666664}, {-1.0}, {}},
    /* logistic m2 theta lambda^2 */ Coef{-3, 4, {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, -0.041666666666666664}, {}, {}},
    /* logistic m2 v1 lambda^0 */ Coef{0, 1, {0.0, -1.0, 0.0, 0.3333333333333333, -0.041666666666666664, -0.025, 0.004166666666666667, -0.0007936507936507937, 0.0001240079365079365, -1.6534391534391536e-05, 1.9290123456790124e-06, -2.0041686708353376e-07, 1.878908128908129e-08, -1.6059043836821615e-09, 1.2617820157502697e-10, -9.17659647818378e-12, 6.213320532103601e-13, -3.936040156083729e-14, 2.342881045287934e-15, -1.3153016394598927e-16, 6.98753995963068e-18, -3.523129391410427e-19, 1.690390364565609e-20, -7.736340341261368e-22, 3.384648899301849e-23, -1.4183290625645841e-24, 5.703071405417034e-26, -2.204085567310931e-27, 8.199723092674595e-29, -2.9405903504764064e-30, 1.0178966597802945e-31, -3.4051501163498504e-33, 1.1021133189078757e-34, -3.4549006862315854e-36, 1.0500188360115601e-37, -3.096829746762205e-39, 8.8711268787459e-41, -2.4702564609120444e-42, 6.691871217640987e-44, -1.7648891123448757e-45, 4.534784524775027e-47, -1.1359381143141137e-48, 2.7757886252036613e-50, -6.620843470968781e-52, 1.5423555813052273e-53, -3.511053355816778e-55, 7.81445622671436e-57, -1.7013165461426614e-58},
      {3.0, -3.0, 0.5, 0.3333333333333333, -0.08333333333333333, -0.008333333333333333}, {-3.0, -1.0}, {}},
    /* logistic m2 v1 lambda^1 */ Coef{-2, 3, {0.0, 0.0, 0.0, 0.16666666666666666, 0.0, -0.025, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 1.0, -0.5, 0.3333333333333333, -0.041666666666666664, -0.016666666666666666}, {1.0}, {}},
    /* logistic m2 v1 lambda^2 */ Coef{-4, 5, {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333}, {}, {}},
    /* logistic m2 v2 lambda^0 */ Coef{0, 0, {1.0, 0.0, -1.0, 0.16666666666666666, 0.125, -0.025, 0.005555555555555556, -0.000992063492063492, 0.00014880952380952382, -1.9290123456790123e-05, 2.204585537918871e-06, -2.2546897546897547e-07, 2.08767569878681e-08, -1.7664948220503776e-09, 1.376489471727567e-10, -9.941312851365761e-12, 6.691268265342339e-13, -4.217185881518281e-14, 2.499073114973796e-15, -1.3975079919261362e-16, 7.398571721961897e-18, -3.7188588020443397e-19, 1.7793582784901146e-20, -8.123157358324437e-22, 3.54582265641146e-23, -1.482798565408429e-24, 5.951031031739514e-26, -2.2959224659488864e-27, 8.527712016381578e-29, -3.0536899793408837e-30, 1.0555965360684537e-31, -3.526762620505202e-33, 1.140117226456423e-34, -3.5700640424393045e-36, 1.0838904113667718e-37, -3.193605676348524e-39, 9.139948905374564e-41, -2.5429110627035748e-42, 6.883067538145015e-44, -1.813913809910011e-45, 4.657346268687866e-47, -1.1658312225855378e-48, 2.8469626925165756e-50, -6.786364557743001e-52, 1.57997401011755e-53, -3.594649864288606e-55, 7.996187766870509e-57, -1.7399828312822674e-58},
      {3.0, -1.0, -1.0, 0.3333333333333333, 0.041666666666666664}, {-2.0, -1.0}, {}},
    /* logistic m2 v2 lambda^1 */ Coef{-2, 4, {0.0, 0.0, 0.0, 0.0, 0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.041666666666666664}, {}, {}},
    /* logistic m2 v2 lambda^2 */ zero_coef(),
    /* logistic m2 v3 lambda^0 */ Coef{0, 1, {0.0, 1.0, -0.5, -0.16666666666666666, 0.08333333333333333, 0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 1.0, -0.5, -0.16666666666666666, 0.08333333333333333, 0.008333333333333333}, {}, {}},
    /* logistic m2 v3 lambda^1 */ Coef{-2, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333}, {}, {}},
    /* logistic m2 v3 lambda^2 */ zero_coef(),
    /* logistic m2 M0 lambda^0 */ Coef{-1, 2, {0.0, 0.0, 0.5, 0.0, -0.08333333333333333, 0.008333333333333333, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 1.0, -0.16666666666666666, -0.041666666666666664}, {-1.0}, {}},
    /* logistic m2 M0 lambda^1 */ Coef{-3, 4, {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, -0.041666666666666664}, {}, {}},
    /* logistic m2 M0 lambda^2 */ zero_coef(),
    /* logistic m2 M1 lambda^0 */ Coef{-2, 3, {0.0, 0.0, 0.0, 0.16666666666666666, 0.0, -0.016666666666666666, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 1.0, -0.5, 0.3333333333333333, -0.041666666666666664, -0.008333333333333333}, {1.0}, {}},
    /* logistic m2 M1 lambda^1 */ Coef{-4, 5, {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333}, {}, {}},
    /* logistic m2 M1 lambda^2 */ zero_coef(),
    /* logistic m2 M2 lambda^0 */ Coef{-3, 4, {0.0, 0.0, 0.0, 0.0, 0.041666666666666664, 0.0, -0.002777777777777778, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 0.5, -0.16666666666666666, 0.08333333333333333, -0.008333333333333333, -0.001388888888888889}, {-1.0}, {}},
    /* logistic m2 M2 lambda^1 */ Coef{-5, 6, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.001388888888888889, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.001388888888888889}, {}, {}},
    /* logistic m2 M2 lambda^2 */ zero_coef(),
    /* logistic m2 M3 lambda^0 */ Coef{-4, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333, 0.0, -0.0003968253968253968, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 1.0, -0.5, 0.16666666666666666, -0.041666666666666664, 0.016666666666666666, -0.001388888888888889, -0.0001984126984126984}, {1.0}, {}},
    /* logistic m2 M3 lambda^1 */ Coef{-6, 7, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.0001984126984126984, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0},
      {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.0001984126984126984}, {}, {}},
    /* logistic m2 M3 lambda^2 */ zero_coef(),
    /* logistic m3 theta lambda^0 */ zero_coef(),
    /* logistic m3 theta lambda^1 */ Coef{-1, 3, {0.0, 0.0, 0.0, -0.16666666666666666, 0.041666666666666664, 0.008333333333333333, -0.002777777777777778, 0.0005952380952380953, -9.92063492063492e-05, 1.3778659611992945e-05, -1.6534391534391535e-06, 1.7536475869809203e-07, -1.670140559029448e-08, 1.4453139453139454e-09, -1.1470745597729724e-10, 8.411880105001798e-12, -5.735372798864862e-13, 3.654894430649177e-14, -2.186688975602072e-15, 1.2330952869936495e-16, -6.576508197299464e-18, 3.3273999807765146e-19, -1.6014224506411032e-20, 7.3495233241983e-22, -3.223475142192237e-23, 1.3538595597207395e-24, -5.455111779094555e-26, 2.1122486686729755e-27, -7.871734168967611e-29, 2.8274907216119292e-30, -9.801967834921354e-32, 3.2835376121944986e-33, -1.0641094113593283e-34, 3.3397373300238655e-36, -1.0161472606563485e-37, 3.000053817175886e-39, -8.602304852117236e-41, 2.3976018591205136e-42, -6.500674897136959e-44, 1.71586441477974e-45, -4.412222780862189e-47, 1.1060450060426897e-48, -2.704614557890747e-50, 6.455322384194561e-52, -1.5047371524929047e-53, 3.42745684734495e-55, -7.632724686558213e-57, 1.6626502610030554e-58},
      {-4.0, 3.0, -1.0, 0.0, 0.041666666666666664}, {4.0, 1.0}, {}},
    /* logistic m3 theta lambda^2 */ Coef{-3, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 0.5, -0.16666666666666666, 0.041666666666666664}, {-1.0}, {}},
    /* logistic m3 v1 lambda^0 */ Coef{0, 2, {0.0, 0.0, 0.5, -0.16666666666666666, -0.041666666666666664, 0.016666666666666666, 0.001388888888888889, -0.0007936507936507937, 0.0001984126984126984, -3.582451499118166e-05, 5.235890652557319e-06, -6.513548180214847e-07, 7.098097375875153e-08, -6.9053888498332945e-09, 6.079495166796754e-10, -4.8941847883646825e-11, 3.632402772614413e-12, -2.5021969563675136e-13, 1.6087783177643814e-14, -9.700349591016708e-16, 5.507825615238301e-17, -2.9555141005720805e-18, 1.5035577453241469e-19, -7.272159920785686e-21, 3.352414147879926e-22, -1.4763516151240444e-23, 6.223786620694242e-25, -2.5163310226799798e-26, 9.774069926468118e-28, -3.6531180123226126e-29, 1.3157256824567511e-30, -4.572630156241228e-32, 1.5353578649613164e-33, -4.986573323794255e-35, 1.568253938946298e-36, -4.780730921564154e-38, 1.4140038600667708e-39, -4.0613922401465667e-41, 1.1337941805888871e-42, -3.0787510070905055e-44, 8.138099795812482e-46, -2.0955068898268256e-47, 5.259763574424374e-49, -1.2877540551034278e-50, 3.0771874768479902e-52, -7.180940077730029e-54, 1.6374011768068928e-55, -3.6500973171788005e-57},
      {-4.0, 1.0, 1.0, -0.5, 0.041666666666666664, 0.008333333333333333}, {4.0, 3.0, 0.5}, {}},
    /* logistic m3 v1 lambda^1 */ Coef{-2, 4, {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.008333333333333333, 0.002777777777777778, -0.0005952380952380953, 9.92063492063492e-05, -1.3778659611992945e-05, 1.6534391534391535e-06, -1.7536475869809203e-07, 1.670140559029448e-08, -1.4453139453139454e-09, 1.1470745597729724e-10, -8.411880105001798e-12, 5.735372798864862e-13, -3.654894430649177e-14, 2.186688975602072e-15, -1.2330952869936495e-16, 6.576508197299464e-18, -3.3273999807765146e-19, 1.6014224506411032e-20, -7.3495233241983e-22, 3.223475142192237e-23, -1.3538595597207395e-24, 5.455111779094555e-26, -2.1122486686729755e-27, 7.871734168967611e-29, -2.8274907216119292e-30, 9.801967834921354e-32, -3.2835376121944986e-33, 1.0641094113593283e-34, -3.3397373300238655e-36, 1.0161472606563485e-37, -3.000053817175886e-39, 8.602304852117236e-41, -2.3976018591205136e-42, 6.500674897136959e-44, -1.71586441477974e-45, 4.412222780862189e-47, -1.1060450060426897e-48, 2.704614557890747e-50, -6.455322384194561e-52, 1.5047371524929047e-53, -3.42745684734495e-55, 7.632724686558213e-57, -1.6626502610030554e-58},
      {4.0, -3.0, 1.0, -0.16666666666666666, -0.041666666666666664, 0.016666666666666666}, {-4.0, -1.0}, {}},
    /* logistic m3 v1 lambda^2 */ Coef{-4, 6, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 1.0, -0.5, 0.16666666666666666, -0.041666666666666664, 0.008333333333333333}, {1.0}, {}},
    /* logistic m3 v2 lambda^0 */ Coef{0, 1, {0.0, -1.0, 0.5, 0.16666666666666666, -0.08333333333333333, -0.008333333333333333, 0.005555555555555556, -0.0015873015873015873, 0.0003224206349206349, -5.235890652557319e-05, 7.164902998236331e-06, -8.517716851050185e-07, 8.977005504783283e-08, -8.511293233515456e-09, 7.341277182547024e-10, -5.8118444361830606e-11, 4.253734825824773e-12, -2.8958009719758864e-13, 1.8430664222931748e-14, -1.1015651230476601e-15, 6.206579611201369e-17, -3.307827039713123e-18, 1.6725967817807077e-19, -8.045793954911823e-21, 3.690879037810111e-22, -1.618184521380503e-23, 6.794093761235945e-25, -2.736739579411073e-26, 1.0594042235735577e-27, -3.9471770473702535e-29, 1.4175153484347805e-30, -4.9131451678762125e-32, 1.645569196852104e-33, -5.332063392417413e-35, 1.673255822547454e-36, -5.090413896240375e-38, 1.5027151288542296e-39, -4.308417886237771e-41, 1.2007128927652971e-42, -3.255239918324993e-44, 8.591578248289985e-46, -2.209100701258237e-47, 5.53734243694474e-49, -1.3539624898131157e-50, 3.2314230349785127e-52, -7.532045413311706e-54, 1.7155457390740363e-55, -3.8202289717930667e-57},
      {-1.0, -2.0, 1.5, -0.16666666666666666, -0.041666666666666664}, {1.0, 2.0, 0.5}, {}},
    /* logistic m3 v2 lambda^1 */ Coef{-2, 5, {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 1.0, -0.5, 0.16666666666666666, -0.041666666666666664}, {1.0}, {}},
    /* logistic m3 v2 lambda^2 */ zero_coef(),
    /* logistic m3 v3 lambda^0 */ Coef{0, 0, {1.0, -1.0, 0.0, 0.16666666666666666, 0.0, -0.016666666666666666, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {0.0, 0.0, -0.5, 0.3333333333333333, -0.041666666666666664, -0.008333333333333333}, {1.0}, {}},
    /* logistic m3 v3 lambda^1 */ Coef{-2, 6, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 0.5, -0.16666666666666666, 0.041666666666666664, -0.008333333333333333}, {-1.0}, {}},
    /* logistic m3 v3 lambda^2 */ zero_coef(),
    /* logistic m3 M0 lambda^0 */ Coef{-1, 3, {0.0, 0.0, 0.0, -0.16666666666666666, 0.041666666666666664, 0.008333333333333333, -0.002777777777777778, 0.0005952380952380953, -9.92063492063492e-05, 1.3778659611992945e-05, -1.6534391534391535e-06, 1.7536475869809203e-07, -1.670140559029448e-08, 1.4453139453139454e-09, -1.1470745597729724e-10, 8.411880105001798e-12, -5.735372798864862e-13, 3.654894430649177e-14, -2.186688975602072e-15, 1.2330952869936495e-16, -6.576508197299464e-18, 3.3273999807765146e-19, -1.6014224506411032e-20, 7.3495233241983e-22, -3.223475142192237e-23, 1.3538595597207395e-24, -5.455111779094555e-26, 2.1122486686729755e-27, -7.871734168967611e-29, 2.8274907216119292e-30, -9.801967834921354e-32, 3.2835376121944986e-33, -1.0641094113593283e-34, 3.3397373300238655e-36, -1.0161472606563485e-37, 3.000053817175886e-39, -8.602304852117236e-41, 2.3976018591205136e-42, -6.500674897136959e-44, 1.71586441477974e-45, -4.412222780862189e-47, 1.1060450060426897e-48, -2.704614557890747e-50, 6.455322384194561e-52, -1.5047371524929047e-53, 3.42745684734495e-55, -7.632724686558213e-57, 1.6626502610030554e-58},
      {-4.0, 3.0, -1.0, 0.0, 0.041666666666666664}, {4.0, 1.0}, {}},
    /* logistic m3 M0 lambda^1 */ Coef{-3, 5, {0.0, 0.0, 0.0, 0.0, 0.0, 0.008333333333333333, -0.001388888888888889, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 0.5, -0.16666666666666666, 0.041666666666666664}, {-1.0}, {}},
    /* logistic m3 M0 lambda^2 */ zero_coef(),
    /* logistic m3 M1 lambda^0 */ Coef{-2, 4, {0.0, 0.0, 0.0, 0.0, -0.041666666666666664, 0.008333333333333333, 0.001388888888888889, -0.0003968253968253968, 7.440476190476191e-05, -1.1022927689594357e-05, 1.3778659611992946e-06, -1.5031265031265032e-07, 1.4613729891507668e-08, -1.284723506945729e-09, 1.0323671037956753e-10, -7.647163731819816e-12, 5.257425065626123e-13, -3.373748705214625e-14, 2.0304969059162094e-15, -1.150888934527406e-16, 6.1654764349682475e-18, -3.131670570142602e-19, 1.5124545367165975e-20, -6.962706307135231e-22, 3.062301385082625e-23, -1.2893900568768947e-24, 5.207152152772075e-26, -2.02041177003502e-27, 7.543745245260627e-29, -2.714391092747452e-30, 9.424969072039764e-32, -3.161925108039147e-33, 1.0261055038107808e-34, -3.224573973816146e-36, 9.82275685301137e-38, -2.903277887589567e-39, 8.333482825488573e-41, -2.3249472573289828e-42, 6.30947857663293e-44, -1.6668397172146048e-45, 4.2896610369493503e-47, -1.0761518977712656e-48, 2.6334404905778323e-50, -6.289801297420342e-52, 1.4671187236805822e-53, -3.343860338873122e-55, 7.450993146402064e-57, -1.6239839758634495e-58},
      {5.0, -4.0, 1.5, -0.3333333333333333, 0.0, 0.008333333333333333}, {-5.0, -1.0}, {}},
    /* logistic m3 M1 lambda^1 */ Coef{-4, 6, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.001388888888888889, -0.0001984126984126984, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 1.0, -0.5, 0.16666666666666666, -0.041666666666666664, 0.008333333333333333}, {1.0}, {}},
    /* logistic m3 M1 lambda^2 */ zero_coef(),
    /* logistic m3 M2 lambda^0 */ Coef{-3, 5, {0.0, 0.0, 0.0, 0.0, 0.0, -0.008333333333333333, 0.001388888888888889, 0.0001984126984126984, -4.96031746031746e-05, 8.267195767195768e-06, -1.1022927689594355e-06, 1.252605419272086e-07, -1.252605419272086e-08, 1.124133068577513e-09, -9.17659647818378e-11, 6.882447358637835e-12, -4.779477332387385e-13, 3.092602979780073e-14, -1.8743048362303473e-15, 1.0686825820611629e-16, -5.7544446726370305e-18, 2.935941159508689e-19, -1.423486622792092e-20, 6.575889290072162e-22, -2.901127627973013e-23, 1.2249205540330499e-24, -4.959192526449595e-26, 1.9285748713970647e-27, -7.215756321553643e-29, 2.6012914638829748e-30, -9.047970309158174e-32, 3.0403126038837948e-33, -9.881015962622333e-35, 3.1094106176084266e-36, -9.484041099459254e-38, 2.8065019580032482e-39, -8.06466079885991e-41, 2.252292655537452e-42, -6.118282256128902e-44, 1.6178150196494692e-45, -4.167099293036512e-47, 1.0462587894998416e-48, -2.562266423264918e-50, 6.124280210646122e-52, -1.4295002948682594e-53, 3.2602638304012935e-55, -7.269261606245916e-57, 1.5853176907238435e-58},
      {-6.0, 5.0, -2.0, 0.5, -0.08333333333333333, 0.0, 0.001388888888888889}, {6.0, 1.0}, {}},
    /* logistic m3 M2 lambda^1 */ Coef{-5, 7, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0001984126984126984, -2.48015873015873e-05, 2.7557319223985893e-06, -2.755731922398589e-07, 2.505210838544172e-08, -2.08767569878681e-09, 1.6059043836821613e-10, -1.1470745597729725e-11, 7.647163731819816e-13, -4.779477332387385e-14, 2.8114572543455206e-15, -1.5619206968586225e-16, 8.22063524662433e-18, -4.110317623312165e-19, 1.9572941063391263e-20, -8.896791392450574e-22, 3.868170170630684e-23, -1.6117375710961184e-24, 6.446950284384474e-26, -2.4795962632247976e-27, 9.183689863795546e-29, -3.279889237069838e-30, 1.1309962886447716e-31, -3.7699876288159054e-33, 1.216125041553518e-34, -3.8003907548547434e-36, 1.151633562077195e-37, -3.387157535521162e-39, 9.67759295863189e-41, -2.6882202662866363e-42, 7.265460179153071e-44, -1.911963205040282e-45, 4.902469756513544e-47, -1.2256174391283858e-48, 2.9893108271424046e-50, -7.117406731291439e-52, 1.6552108677421951e-53, -3.7618428812322616e-55, 8.359650847182804e-57, -1.817315401561479e-58, 3.866628513960594e-60},
      {1.0, -1.0, 0.5, -0.16666666666666666, 0.041666666666666664, -0.008333333333333333, 0.001388888888888889}, {-1.0}, {}},
    /* logistic m3 M2 lambda^2 */ zero_coef(),
    /* logistic m3 M3 lambda^0 */ Coef{-4, 6, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, -0.001388888888888889, 0.0001984126984126984, 2.48015873015873e-05, -5.5114638447971785e-06, 8.267195767195768e-07, -1.0020843354176688e-07, 1.043837849393405e-08, -9.635426302092969e-10, 8.029521918410807e-11, -6.117730985455853e-12, 4.301529599148647e-13, -2.8114572543455208e-14, 1.7181127665444849e-15, -9.864762295949196e-17, 5.343412910305814e-18, -2.7402117488747764e-19, 1.334518708867586e-20, -6.189072273009095e-22, 2.7399538708634014e-23, -1.1604510511892052e-24, 4.711232900127115e-26, -1.8367379727591092e-27, 6.887767397846659e-29, -2.488191835018498e-30, 8.670971546276583e-32, -2.918700099728443e-33, 9.500976887136859e-35, -2.994247261400707e-36, 9.145325345907137e-38, -2.7097260284169296e-39, 7.795838772231245e-41, -2.1796380537459213e-42, 5.927085935624874e-44, -1.568790322084334e-45, 4.0445375491236733e-47, -1.0163656812284176e-48, 2.491092355952004e-50, -5.958759123871902e-52, 1.3918818660559369e-53, -3.1766673219294655e-55, 7.087530066089769e-57, -1.5466514055842375e-58},
      {7.0, -6.0, 2.5, -0.6666666666666666, 0.125, -0.016666666666666666, 0.0, 0.0001984126984126984}, {-7.0, -1.0}, {}},
    /* logistic m3 M3 lambda^1 */ Coef{-6, 8, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 2.48015873015873e-05, -2.7557319223985893e-06, 2.755731922398589e-07, -2.505210838544172e-08, 2.08767569878681e-09, -1.6059043836821613e-10, 1.1470745597729725e-11, -7.647163731819816e-13, 4.779477332387385e-14, -2.8114572543455206e-15, 1.5619206968586225e-16, -8.22063524662433e-18, 4.110317623312165e-19, -1.9572941063391263e-20, 8.896791392450574e-22, -3.868170170630684e-23, 1.6117375710961184e-24, -6.446950284384474e-26, 2.4795962632247976e-27, -9.183689863795546e-29, 3.279889237069838e-30, -1.1309962886447716e-31, 3.7699876288159054e-33, -1.216125041553518e-34, 3.8003907548547434e-36, -1.151633562077195e-37, 3.387157535521162e-39, -9.67759295863189e-41, 2.6882202662866363e-42, -7.265460179153071e-44, 1.911963205040282e-45, -4.902469756513544e-47, 1.2256174391283858e-48, -2.9893108271424046e-50, 7.117406731291439e-52, -1.6552108677421951e-53, 3.7618428812322616e-55, -8.359650847182804e-57, 1.817315401561479e-58, -3.866628513960594e-60},
      {-1.0, 1.0, -0.5, 0.16666666666666666, -0.041666666666666664, 0.008333333333333333, -0.001388888888888889, 0.0001984126984126984}, {1.0}, {}},
    /* logistic m3 M3 lambda^2 */ zero_coef()
}};

}  // namespace holmc::detail
