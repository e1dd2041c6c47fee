//! Reference values computed at 25-30 significant digits with an
//! independent arbitrary-precision implementation and frozen here.
//! Each constant is (re, im) even when the imaginary part is zero.
#![allow(dead_code)]

use num_complex::Complex64;

pub fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// |a - b| <= tol * max(|b|, floor): relative closeness against a frozen value.
pub fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
    (a - b).norm() <= tol * b.norm().max(1e-300)
}

pub const TABLE1_JJ2_REAL: (f64, f64) = (0.000680895719938696445449438600757, 0.0);
pub const TABLE1_JJ2_CX: (f64, f64) = (0.000741032622065297229898914365821, 0.00100378515014132337596079696496);
pub const TABLE1_JJ3_REAL: (f64, f64) = (0.0000548129590405744615465221831367, 0.0);
pub const TABLE1_JJ3_CX: (f64, f64) = (-0.0000260529315137240944756899728944, 0.000120957673384534619340964542600);
pub const TABLE1_YY0_REAL: (f64, f64) = (0.0639985543886343654018206989079, 0.0);
pub const TABLE1_YY0_CX: (f64, f64) = (0.00806693925758700940691647023849, -0.0549796518241775733839068446581);
pub const TABLE1_JY0_REAL: (f64, f64) = (-0.00941848239237643776547179853758, 0.0);
pub const TABLE1_JY0_CX: (f64, f64) = (0.0119297158537597844977899120017, 0.0214097930805840540655316920423);
pub const TABLE1_JY1_REAL: (f64, f64) = (-0.00851272861612579584857241842761, 0.0);
pub const TABLE1_JY1_CX: (f64, f64) = (-0.00551434905346005753003892954710, 0.00935436238409808413209522268281);
pub const TABLE1_JY3_REAL: (f64, f64) = (-0.000878440563131856460803805176874, 0.0);
pub const TABLE1_JY3_CX: (f64, f64) = (-0.000409006845282585687991081697999, 0.000319740250758475930767663564042);
pub const KILLDEMO_ETA001: (f64, f64) = (0.0164786593504666682762694857550, -0.0138487149242608326062254102576);
pub const KILLDEMO_ETA0005: (f64, f64) = (0.0164061953277516332736133746801, -0.0136812262197411142898872090957);
pub const KILLDEMO_LIMIT: (f64, f64) = (0.0163332153033133062156768806547, -0.0135187542648533690932803899913);
pub const K0_1: (f64, f64) = (0.421024438240708333335627379213, 0.0);
pub const I52_SMALLARG: (f64, f64) = (0.0131377948395502054093266620430, 0.0);
pub const K0_5: (f64, f64) = (0.00369109833404259427473526100746, 0.0);
pub const K1_5: (f64, f64) = (0.00404461344545216420836502183754, 0.0);
pub const K2_5: (f64, f64) = (0.00530894371222345995808126974247, 0.0);
pub const K3_5: (f64, f64) = (0.00829176841523093217483003763152, 0.0);
pub const J13_73: (f64, f64) = (0.281801276373027581892650417611, 0.0);
pub const Y13_73: (f64, f64) = (-0.0876682767876755709831902246247, 0.0);
pub const J5_22: (f64, f64) = (0.0109368818615547603017178114256, 0.0);
pub const Y5_40: (f64, f64) = (0.0318694487808503640844048264002, 0.0);
pub const I2_9P7I: (f64, f64) = (738.845406693597256115422156225, 398.328987536722561665763197106);
pub const K2_37: (f64, f64) = (0.0251593275444500490111110593628, 0.0);
pub const J07_C: (f64, f64) = (0.304083724654218366657860470145, 0.126386105823730945788636591425);
pub const Y07_C: (f64, f64) = (-1.36941783262238625695400134902, 0.557666352588903075631434951544);
pub const JM07_C: (f64, f64) = (0.929146370177703081581433751055, -0.525449445533378947820714590885);
pub const SPHJ2_137: (f64, f64) = (0.109201805608471005243802612244, 0.0);
pub const SPHJ5_03: (f64, f64) = (0.000000232958255672902773412687482121, 0.0);
pub const SPHJ12_29: (f64, f64) = (0.0000000382667580649701231154372960863, 0.0);
pub const SPHJ0_C: (f64, f64) = (0.347627722275592934133496774770, -0.531100237695684654780722220636);
pub const SPHY3_C: (f64, f64) = (-0.244957631259417658940062300042, 0.574743346816855160726192443443);
pub const SPHY1_296: (f64, f64) = (0.0512454757198544843462809962706, 0.0);
pub const SPHH2_C: (f64, f64) = (-0.596629553274814013134476759694, -0.799236626467203331514599897523);
pub const PSI3_C: (f64, f64) = (0.00752466514439519094022677450618, 0.0214196943485915435461027757527);
pub const PSI3D_C: (f64, f64) = (0.0439740503282912241642681919523, 0.0535018812991229864702303845639);
pub const CHI2_08: (f64, f64) = (-5.25919133159088284574717034699, 0.0);
pub const CHI2D_08: (f64, f64) = (11.5597388513937275765898137798, 0.0);
pub const LGAMMA21: (f64, f64) = (42.3356164607534850296598759707, 0.0);
pub const LGAMMA_05: (f64, f64) = (0.572364942924700087071713675677, 0.0);
pub const S_13_M5: (f64, f64) = (0.309656446166358093785560140717, 0.0);
pub const S_13_M35: (f64, f64) = (0.0943335691048680091329038645146, 0.0);
pub const S_09_P20: (f64, f64) = (105327558.615321581555316834238, 0.0);
pub const S_09_C: (f64, f64) = (-0.135830498177597666418365670258, -0.0447133075373646497479395250056);
pub const S_52_M60: (f64, f64) = (0.0443149085746989013939116736000, 0.0);
pub const S_23_M55: (f64, f64) = (0.108404853404111217111969056392, 0.0);
pub const S_12_M200: (f64, f64) = (0.00282805385330428092922777454095, 0.0);
pub const S_07_M55: (f64, f64) = (-0.0672131714179199219316272659917, 0.0);
pub const S_07_M55C: (f64, f64) = (-0.0665247896058807090969217241877, 0.0119716500090466663211083183148);
pub const S_72_M52: (f64, f64) = (-0.0656770165422681821548106290449, 0.0);
pub const H_32_M10: (f64, f64) = (-2107.28671488748278860482784615, 0.0);
pub const H_13_M5: (f64, f64) = (-178.202297755889631190316072646, 0.0);
pub const H_12_M05: (f64, f64) = (-3.54857251349967174098603722181, 0.0);
pub const HM1INT_1_A01: (f64, f64) = (-29.6826318205153206842231160081, 0.0);
pub const HM1INT_2_A01: (f64, f64) = (-23.7461054564122565473784928065, 0.0);
pub const HM1INT_3_A01: (f64, f64) = (-17.0180422437621171922879198446, 0.0);
pub const HM1INT_4_A01: (f64, f64) = (-11.3981306190778831427416765471, 0.0);
pub const HM1INT_0_A01_5TERM: (f64, f64) = (-32.0884515333278310189946627364, 0.0);
pub const IJY_INT0_122: (f64, f64) = (0.256300629172222128113551638324, 0.0);
pub const IJY_INT1_122: (f64, f64) = (0.125904970472893612103254243747, 0.0);
pub const IJY_INT2_122: (f64, f64) = (0.0467836978911693475028705024113, 0.0);
pub const IJY_INT3_122: (f64, f64) = (0.00890054061401046621622339980684, 0.0);
pub const CYLA_JJ: (f64, f64) = (0.0518502913785747606563265208366, 0.0);
pub const CYLA_JY: (f64, f64) = (-0.00711611463181943386623319344762, 0.0);
pub const CYLA_YY: (f64, f64) = (0.0508297464307554632864530842191, 0.0);
pub const CYLA_JJM: (f64, f64) = (0.0320878817366851574973996767143, 0.0);
pub const CYLA_JMJ: (f64, f64) = (0.0854435408247098552140885699523, 0.0);
pub const CYLA_JMY: (f64, f64) = (-0.0475779089928653461257038369155, 0.0);
pub const CYLA_JYM: (f64, f64) = (0.0413456122115612881332210505784, 0.0);
pub const CYLB_JJ: (f64, f64) = (0.121160855232258225635556166860, -0.0178855740793394980253943026972);
pub const CYLB_JY: (f64, f64) = (-0.00587658495871382834664612765282, 0.0294445551378963881536444328257);
pub const CYLB_YY: (f64, f64) = (0.177931776101800940239294413706, -0.0762013368382691421429091579795);
pub const CYLB_JJM: (f64, f64) = (-0.0318517989012236868182459764689, -0.0224764896886403449998029469063);
pub const CYLB_JMJ: (f64, f64) = (0.104496487612099391394965632646, -0.0383183883133569396780986095210);
pub const CYLB_JMY: (f64, f64) = (-0.167407210496457291124275983341, 0.0633729100210176451111185019012);
pub const CYLB_JYM: (f64, f64) = (0.117046785509663709842478336512, -0.0261090597052556791055792460715);
pub const SPH_JY2_229: (f64, f64) = (-0.501439147474935731020168435345, 0.0);
pub const SPH_JY0_EQUAL: (f64, f64) = (-0.115555732776138671969009334949, 0.0);
pub const SPH_JY0_ETA0001: (f64, f64) = (0.167151166216461112321355819157, 0.0);
pub const MJJ_2_FIN: (f64, f64) = (0.0737007327332774519601029260071, 0.0);
pub const NHH_1_INF: (f64, f64) = (-0.127130467863408765410748837394, 0.0750450975160291875715859953012);
pub const MHH_1_INF: (f64, f64) = (-0.0872961919634662821875107862037, -0.119529303887110111317967599537);
pub const NJJ_EQUAL_FIN: (f64, f64) = (0.0961301208783042434825637477816, 0.0);
pub const ACCEL_EVEN_X1_A075: (f64, f64) = (1.47587291346565799497560718086, 0.0);
pub const ACCEL_EVEN_M3_A15: (f64, f64) = (5.08857455041042028001494130449, 0.0);
pub const ACCEL_ODD_M3_A15: (f64, f64) = (-4.97985797191848930508917674600, 0.0);
