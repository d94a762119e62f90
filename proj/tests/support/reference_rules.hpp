#pragma once

// Gaussian summation rules computed at 60 significant digits (mpmath eigsy on the
// Jacobi matrix), rounded to 21 digits. Independent of the library's eigensolver.

#include <array>

namespace gsum::testdata {

inline constexpr std::array<double, 15> kNodes15{
    0.0000988233881783893674254,
    0.000877658995592089376789,
    0.00237255314976244530231,
    0.00445713321645119831664,
    0.00693913386237121195522,
    0.00957607612839782567258,
    0.0122937605354464662103,
    0.0156234874020303517373,
    0.0204081545594334127637,
    0.027777777769212290177,
    0.0399999999999990000722,
    0.0624999999999999999932,
    0.111111111111111111111,
    0.25,
    1.0,
};
inline constexpr std::array<double, 15> kWeights15{
    0.0396983306744378200419,
    0.0389051652085366613128,
    0.0372867043007147953373,
    0.0347644923942019320951,
    0.0312169712059040216395,
    0.0270625824613937567204,
    0.0260354388302000473575,
    0.0313039694680300895827,
    0.0408167009603144215179,
    0.0555555559704445177617,
    0.0800000000000525869754,
    0.12500000000000000038,
    0.222222222222222222222,
    0.5,
    2.0,
};

inline constexpr std::array<double, 60> kNodes60{
    0.000000446951821924670664287,
    0.00000401898137558419424935,
    0.0000111439177125374007385,
    0.000021783501893746987505,
    0.0000358803089490285779934,
    0.0000533576951317766566457,
    0.0000741197118987779692865,
    0.0000980509711896451681862,
    0.000125016439857478336533,
    0.000154861131732777467362,
    0.000187409652269678314662,
    0.000222465530542286131293,
    0.000259810242338708955956,
    0.000299201778997330086448,
    0.000340372536707401712638,
    0.000383026167941405672714,
    0.000426832813936829233714,
    0.000471421782744703768845,
    0.000516370324097085755372,
    0.000561187704092552044018,
    0.000605302239084918506477,
    0.000648110395573898302595,
    0.000689319998926906608052,
    0.000729771482576594975618,
    0.000771518688598734082192,
    0.000816320144845894367882,
    0.000865051610088250852145,
    0.000918273636933981409433,
    0.000976562499835112083007,
    0.00104058272632467213301,
    0.00111111111111109404089,
    0.00118906064209274663813,
    0.00127551020408163265274,
    0.00137174211248285322359,
    0.00147928994082840236686,
    0.0016,
    0.00173611111111111111111,
    0.00189035916824196597353,
    0.00206611570247933884298,
    0.00226757369614512471655,
    0.0025,
    0.00277008310249307479224,
    0.00308641975308641975309,
    0.00346020761245674740484,
    0.00390625,
    0.00444444444444444444444,
    0.00510204081632653061224,
    0.00591715976331360946746,
    0.00694444444444444444444,
    0.0082644628099173553719,
    0.01,
    0.0123456790123456790123,
    0.015625,
    0.020408163265306122449,
    0.0277777777777777777778,
    0.04,
    0.0625,
    0.111111111111111111111,
    0.25,
    1.0,
};
inline constexpr std::array<double, 60> kWeights60{
    0.0026738803199774654998,
    0.00267030377698304523452,
    0.00266314109048827935258,
    0.00265237268578037556188,
    0.00263796823901438069217,
    0.00261988544240214644595,
    0.00259806821174812381971,
    0.00257244418544457556793,
    0.002542921287702505232,
    0.00250938301441182252024,
    0.00247168192275397685092,
    0.0024296305226969990394,
    0.00238298830428600270904,
    0.00233144285463965876797,
    0.00227458168633694414744,
    0.00221184913485989070796,
    0.00214247910562850539502,
    0.00206539066936983377565,
    0.00197904194032253022432,
    0.00188134063660740989937,
    0.00177036609736841917597,
    0.00164958091466283322721,
    0.0015447255887103140153,
    0.00150757094945434492654,
    0.00155058769103388569786,
    0.00163329632330391843073,
    0.00173013705860709143656,
    0.00183654836355772011158,
    0.00195312502215201424996,
    0.00208116545295005611998,
    0.00222222222222480494238,
    0.00237812128418550805644,
    0.00255102040816326535928,
    0.00274348422496570644731,
    0.00295857988165680473373,
    0.0032,
    0.00347222222222222222222,
    0.00378071833648393194707,
    0.00413223140495867768595,
    0.00453514739229024943311,
    0.005,
    0.00554016620498614958449,
    0.00617283950617283950617,
    0.00692041522491349480969,
    0.0078125,
    0.00888888888888888888889,
    0.0102040816326530612245,
    0.0118343195266272189349,
    0.0138888888888888888889,
    0.0165289256198347107438,
    0.02,
    0.0246913580246913580247,
    0.03125,
    0.040816326530612244898,
    0.0555555555555555555556,
    0.08,
    0.125,
    0.222222222222222222222,
    0.5,
    2.0,
};

} // namespace gsum::testdata
