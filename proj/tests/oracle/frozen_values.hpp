#pragma once

// Reference values computed independently with mpmath at 110 digits,
// printed to 80 significant digits.

namespace oracle::frozen {

inline constexpr const char* pi =
    "3.1415926535897932384626433832795028841971693993751058209749445923078164062862090";
inline constexpr const char* exp_minus_pi =
    "0.043213918263772249774417737171728011275728109810633082980719687401050765757017968";
inline constexpr const char* two_pow_eighth =
    "1.0905077326652576592070106557607079789927027185400671217856676476833005308488418";
inline constexpr const char* phi_0_1 =
    "1.2002000020000002000000002000000000020000000000002000000000000002000000000000000";
inline constexpr const char* psi_0_1 =
    "1.1010010001000010000010000001000000010000000010000000001000000000010000000000010";
inline constexpr const char* fneg_0_1 =
    "0.89001009999899900000010000999999998999990000000000100000099999999999989999999000";
inline constexpr const char* fpos_0_1 =
    "1.0899898999990010000001000100000000099998999999999989999989999999999999000000100";
inline constexpr const char* chi_0_1 =
    "1.1011111222233345556789023357902579269161484060774000991579539458895406970361380";
inline constexpr const char* phi_0_7 =
    "2.9678273689287804683011292597598749773529633639703154101569938203321518096118278";
inline constexpr const char* fneg_minus_0_3 =
    "1.2073507829110705251182829722888273708949993455899680757581436068248411402959286";
inline constexpr const char* f_0_2_0_3 =
    "1.5078075604525648628202128566978471720774337539718089645332582879979833009156269";
inline constexpr const char* f_minus_0_5_0_4 =
    "0.81849363624792979522014861286984104846039640936098591890986706384507206900129251";
inline constexpr const char* qp_0_3_0_5 =
    "0.51011782663398757183227221768062794527555543244426556578375143416670498259932425";
inline constexpr const char* hyp_0_3 =
    "1.0910959103627815663954122100195485354913165800863926186914500305361345388314054";
inline constexpr const char* hyp_0_9 =
    "1.6412644143423707332869997473678304569471824108866987507654215372250596995588109";
inline constexpr const char* hyp_1e_minus_12 =
    "9.6777695871659995515129751573142096092135774937268748565341524158220505419991258";
inline constexpr const char* ellipk_0_5 =
    "1.6857503548125960428712036577990769895008008941410890441199482978934337028823468";
inline constexpr const char* alpha_q_0_05 =
    "0.55187034546696891173727931811692398260808998482590968142043062933227197976258250";
inline constexpr const char* alpha_q_0_1 =
    "0.80240329821757621168756439911162659214227360026792085871208181765421379301050619";
inline constexpr const char* alpha_q_0_2 =
    "0.96585219359507895720344845969993071026170830364618305125502108001626144940279155";
inline constexpr const char* alpha_q_0_3 =
    "0.99560436836083024098131802551983337711972509969274913069309683871018339193381960";
inline constexpr const char* alpha_q_0_4 =
    "0.99966414727081201722801512303831684860563306521988650270485209665786582747674981";
inline constexpr const char* alpha_2 =
    "0.17157287525380990239662255158060384286065624924610385364664052401853504307578592";
inline constexpr const char* alpha_3 =
    "0.066987298107780676618138414623531908264298686547404842986048255137016745772799991";
inline constexpr const char* G_5 =
    "1.1278384855616822602648354831770424584364683354236557672900491864004762095395536";
inline constexpr const char* G_7 =
    "1.1892071150027210667174999705604759152929720924638174130190022247194666682269172";
inline constexpr const char* G_2 =
    "1.0238072749091840347486649524213013982668365739592240428978683683555007540305487";
inline constexpr const char* g_1 =
    "0.91700404320467123174354159479414442803865516643683974979166206935323883112234736";
inline constexpr const char* g_2 =
    "1.0000000000000000000000000000000000000000000000000000000000000000000000000000000";
inline constexpr const char* g_8 =
    "1.2175188957135484808684093215421861282707704274964166628280701025695710752378460";
inline constexpr const char* s1_0_1 =
    "0.68791390857224247160179153797037937759854838281991141564024646550479544373098172";
inline constexpr const char* s2_0_1 =
    "0.84248393632097412694818605386236608988519402691294858564404261280587365627797339";
inline constexpr const char* s1_exp_minus_pi =
    "0.64841977732550483296687705889622557991767257471248275640389526131450731282367218";
inline constexpr const char* s2_0_5 =
    "2.9644924287588304590665286017463506783194647650101851591827880775943554504816065";

}  // namespace oracle::frozen
