#pragma once
// Frozen reference values (high-precision evaluations) for the special-function tests.
namespace refdata {
struct BesselRef { double nu, t_re, t_im, v_re, v_im; };
inline constexpr BesselRef kJ[] = {
    {0.0, 0.30000000000000000, 0.0, 0.97762624653829609, 0.0},
    {0.0, 2.0000000000000000, 0.0, 0.22389077914123567, 0.0},
    {0.0, 10.000000000000000, 0.0, -0.24593576445134834, 0.0},
    {0.0, 24.000000000000000, 0.0, -0.056230274166859267, 0.0},
    {0.0, 26.000000000000000, 0.0, 0.15599931552242113, 0.0},
    {0.0, 40.000000000000000, 0.0, 0.0073668905842372896, 0.0},
    {0.0, 0.50000000000000000, 0.50000000000000000, 0.99609417384789317, -0.12494574864703526},
    {0.0, 3.0000000000000000, 4.0000000000000000, -8.8121437936979055, -4.5984378997430351},
    {0.0, 10.000000000000000, 17.000000000000000, -2080544.6595300218, 657284.67726103219},
    {0.0, 0.0, 20.000000000000000, 43558282.559553533, 0.0},
    {0.0, 0.0, 24.000000000000000, 2168619088.2413765, 0.0},
    {0.0, -8.0000000000000000, 3.0000000000000000, 1.2622634723205309, 2.4450926858689155},
    {0.10000000000000000, 0.30000000000000000, 0.0, 0.85180759557596647, 0.0},
    {0.10000000000000000, 2.0000000000000000, 0.0, 0.30004715009213750, 0.0},
    {0.10000000000000000, 10.000000000000000, 0.0, -0.23425121255868131, 0.0},
    {0.10000000000000000, 24.000000000000000, 0.0, -0.079417249459382780, 0.0},
    {0.10000000000000000, 26.000000000000000, 0.0, 0.15596587546659236, 0.0},
    {0.10000000000000000, 40.000000000000000, 0.0, 0.026961630848211025, 0.0},
    {0.10000000000000000, 0.50000000000000000, 0.50000000000000000, 0.94966656289458527, -0.033201319712174408},
    {0.10000000000000000, 3.0000000000000000, 4.0000000000000000, -7.9810824387023632, -5.9096485498940873},
    {0.10000000000000000, 10.000000000000000, 17.000000000000000, -2157230.0042758968, 323942.00606466991},
    {0.10000000000000000, 0.0, 20.000000000000000, 43010968.988527280, 6812268.2510638801},
    {0.10000000000000000, 0.0, 24.000000000000000, 2141463857.4142981, 339174554.53178620},
    {0.10000000000000000, -8.0000000000000000, 3.0000000000000000, 0.86346175651688835, 2.6143992336578905},
    {0.25000000000000000, 0.30000000000000000, 0.0, 0.67429964067164165, 0.0},
    {0.25000000000000000, 2.0000000000000000, 0.0, 0.39781106433817835, 0.0},
    {0.25000000000000000, 10.000000000000000, 0.0, -0.20639378685517281, 0.0},
    {0.25000000000000000, 24.000000000000000, 0.0, -0.11028424807329601, 0.0},
    {0.25000000000000000, 26.000000000000000, 0.0, 0.14879550870781256, 0.0},
    {0.25000000000000000, 40.000000000000000, 0.0, 0.054911752342599732, 0.0},
    {0.25000000000000000, 0.50000000000000000, 0.50000000000000000, 0.84865875450978938, 0.082099748800318570},
    {0.25000000000000000, 3.0000000000000000, 4.0000000000000000, -6.3808769932556640, -7.5531381923194204},
    {0.25000000000000000, 10.000000000000000, 17.000000000000000, -2170853.8916761427, -186851.43498023775},
    {0.25000000000000000, 0.0, 20.000000000000000, 40178114.504919106, 16642319.938516665},
    {0.25000000000000000, 0.0, 24.000000000000000, 2000878824.9277389, 828791145.95021110},
    {0.25000000000000000, -8.0000000000000000, 3.0000000000000000, 0.22028727521246235, 2.7449244368946893},
    {0.50000000000000000, 0.30000000000000000, 0.0, 0.43049351732812457, 0.0},
    {0.50000000000000000, 2.0000000000000000, 0.0, 0.51301613656182775, 0.0},
    {0.50000000000000000, 10.000000000000000, 0.0, -0.13726373575505048, 0.0},
    {0.50000000000000000, 24.000000000000000, 0.0, -0.14748928746712272, 0.0},
    {0.50000000000000000, 26.000000000000000, 0.0, 0.11932364893397460, 0.0},
    {0.50000000000000000, 40.000000000000000, 0.0, 0.094000962389533578, -5.0244775144319262e-59},
    {0.50000000000000000, 0.50000000000000000, 0.50000000000000000, 0.63996489687520858, 0.20458195494085340},
    {0.50000000000000000, 3.0000000000000000, 4.0000000000000000, -3.0813244033972604, -9.2374868886291193},
    {0.50000000000000000, 10.000000000000000, 17.000000000000000, -1928596.7552858055, -994356.60008495380},
    {0.50000000000000000, 0.0, 20.000000000000000, 30603402.077267698, 30603402.077267698},
    {0.50000000000000000, 0.0, 24.000000000000000, 1525306120.0821002, 1525306120.0821002},
    {0.50000000000000000, -8.0000000000000000, 3.0000000000000000, -0.87660909854819424, 2.6042699383097677},
    {0.75000000000000000, 0.30000000000000000, 0.0, 0.25889668297249306, 0.0},
    {0.75000000000000000, 2.0000000000000000, 0.0, 0.56982182917425685, 0.0},
    {0.75000000000000000, 10.000000000000000, 0.0, -0.049689289747515081, 0.0},
    {0.75000000000000000, 24.000000000000000, 0.0, -0.16267054201693723, 0.0},
    {0.75000000000000000, 26.000000000000000, 0.0, 0.072345065290087668, 0.0},
    {0.75000000000000000, 40.000000000000000, 0.0, 0.11888584531230383, 0.0},
    {0.75000000000000000, 0.50000000000000000, 0.50000000000000000, 0.43392267864331931, 0.24709168540152968},
    {0.75000000000000000, 3.0000000000000000, 4.0000000000000000, 0.46124000187850935, -9.4832646633734545},
    {0.75000000000000000, 10.000000000000000, 17.000000000000000, -1398498.5624234664, -1639411.4339668064},
    {0.75000000000000000, 0.0, 20.000000000000000, 16430178.493968951, 39665959.752350595},
    {0.75000000000000000, 0.0, 24.000000000000000, 820016992.67015829, 1979696145.0806950},
    {0.75000000000000000, -8.0000000000000000, 3.0000000000000000, -1.8362848861876910, 2.0233687677641159},
    {0.90000000000000000, 0.30000000000000000, 0.0, 0.18631991816383298, 0.0},
    {0.90000000000000000, 2.0000000000000000, 0.0, 0.57920025998049510, 0.0},
    {0.90000000000000000, 10.000000000000000, 0.0, 0.0063715980635709798, 0.0},
    {0.90000000000000000, 24.000000000000000, 0.0, -0.16031553879269877, 0.0},
    {0.90000000000000000, 26.000000000000000, 0.0, 0.038676139602226730, 0.0},
    {0.90000000000000000, 40.000000000000000, 0.0, 0.12542203507945681, 0.0},
    {0.90000000000000000, 0.50000000000000000, 0.50000000000000000, 0.32714390630770334, 0.24412546590569948},
    {0.90000000000000000, 3.0000000000000000, 4.0000000000000000, 2.4518851056609806, -8.9770125982192362},
    {0.90000000000000000, 10.000000000000000, 17.000000000000000, -978150.49733552756, -1906837.6262427850},
    {0.90000000000000000, 0.0, 20.000000000000000, 6673868.0968360928, 42137144.805140328},
    {0.90000000000000000, 0.0, 24.000000000000000, 333447829.71880854, 2105306739.9522333},
    {0.90000000000000000, -8.0000000000000000, 3.0000000000000000, -2.2691390616530140, 1.4972885434364557},
    {-0.30000000000000000, 0.30000000000000000, 0.0, 1.3176068613538719, 0.0},
    {-0.30000000000000000, 2.0000000000000000, 0.0, -0.043847077073278794, 0.0},
    {-0.30000000000000000, 10.000000000000000, 0.0, -0.24417837120487250, 0.0},
    {-0.30000000000000000, 24.000000000000000, 0.0, 0.019587300507038030, 0.0},
    {-0.30000000000000000, 26.000000000000000, 0.0, 0.13339145094921378, 0.0},
    {-0.30000000000000000, 40.000000000000000, 0.0, -0.050740625777475582, 0.0},
    {-0.30000000000000000, 0.50000000000000000, 0.50000000000000000, 0.97273495332151974, -0.42668726050721227},
    {-0.30000000000000000, 3.0000000000000000, 4.0000000000000000, -9.8703205264317951, -0.032646263504307683},
    {-0.30000000000000000, 10.000000000000000, 17.000000000000000, -1550428.7512436680, 1529021.8669397826},
    {-0.30000000000000000, 0.0, 20.000000000000000, 38721183.113318220, -19729428.230769552},
    {-0.30000000000000000, 0.0, 24.000000000000000, 1928555240.5717699, -982647975.82716735},
    {-0.30000000000000000, -8.0000000000000000, 3.0000000000000000, 2.2168137459623154, 1.6150325057112718},
    {-0.75000000000000000, 0.30000000000000000, 0.0, 1.0422621958764426, 0.0},
    {-0.75000000000000000, 2.0000000000000000, 0.0, -0.44672065795573945, 0.0},
    {-0.75000000000000000, 10.000000000000000, 0.0, -0.13992324072188759, 0.0},
    {-0.75000000000000000, 24.000000000000000, 0.0, 0.12099614331984260, 0.0},
    {-0.75000000000000000, 26.000000000000000, 0.0, 0.046969785447089729, 0.0},
    {-0.75000000000000000, 40.000000000000000, 0.0, -0.11392468528972473, 0.0},
    {-0.75000000000000000, 0.50000000000000000, 0.50000000000000000, 0.32072597216603694, -0.57571127758463010},
    {-0.75000000000000000, 3.0000000000000000, 4.0000000000000000, -7.0344566350824758, 6.3834705808987904},
    {-0.75000000000000000, 10.000000000000000, 17.000000000000000, -170351.12514342440, 2148126.7590819638},
    {-0.75000000000000000, 0.0, 20.000000000000000, 16430178.493968951, -39665959.752350595},
    {-0.75000000000000000, 0.0, 24.000000000000000, 820016992.67015829, -1979696145.0806950},
    {-0.75000000000000000, -8.0000000000000000, 3.0000000000000000, 2.7201839525228409, -0.12873691750598005},
    {1.2500000000000000, 0.30000000000000000, 0.0, 0.081570538576293454, 0.0},
    {1.2500000000000000, 2.0000000000000000, 0.0, 0.54617342404028404, 0.0},
    {1.2500000000000000, 10.000000000000000, 0.0, 0.12960355137912895, 0.0},
    {1.2500000000000000, 24.000000000000000, 0.0, -0.12329373182136960, 0.0},
    {1.2500000000000000, 26.000000000000000, 0.0, -0.044108333356554873, 0.0},
    {1.2500000000000000, 40.000000000000000, 0.0, 0.11461108219400723, 0.0},
    {1.2500000000000000, 0.50000000000000000, 0.50000000000000000, 0.14465327948901704, 0.19243177472989470},
    {1.2500000000000000, 3.0000000000000000, 4.0000000000000000, 6.0473529601015823, -6.3261887129775025},
    {1.2500000000000000, 10.000000000000000, 17.000000000000000, 138365.24685110374, -2103093.3377340305},
    {1.2500000000000000, 0.0, 20.000000000000000, -16014120.495506034, 38661506.889727617},
    {1.2500000000000000, 0.0, 24.000000000000000, -802750510.46286222, 1938011169.5613671},
    {1.2500000000000000, -8.0000000000000000, 3.0000000000000000, -2.6758519312284274, -0.026196351814532976},
    {-1.2500000000000000, 0.30000000000000000, 0.0, -2.3792096882503144, 0.0},
    {-1.2500000000000000, 2.0000000000000000, 0.0, -0.57071855808030008, 0.0},
    {-1.2500000000000000, 10.000000000000000, 0.0, 0.062110476875324492, 0.0},
    {-1.2500000000000000, 24.000000000000000, 0.0, 0.16252993982370456, 0.0},
    {-1.2500000000000000, 26.000000000000000, 0.0, -0.075026475860748987, 0.0},
    {-1.2500000000000000, 40.000000000000000, 0.0, -0.11836733127766815, 0.0},
    {-1.2500000000000000, 0.50000000000000000, 0.50000000000000000, -0.74354793508178244, 0.44066390771971353},
    {-1.2500000000000000, 3.0000000000000000, 4.0000000000000000, 0.19642954791558545, 8.7443568596706300},
    {-1.2500000000000000, 10.000000000000000, 17.000000000000000, 1389272.5562510194, 1584950.5649089442},
    {-1.2500000000000000, 0.0, 20.000000000000000, -16014120.495506034, -38661506.889727617},
    {-1.2500000000000000, 0.0, 24.000000000000000, -802750510.46286222, -1938011169.5613671},
    {-1.2500000000000000, -8.0000000000000000, 3.0000000000000000, 1.9140995054114164, -1.8828665406847003},
    {1.9000000000000000, 0.30000000000000000, 0.0, 0.014769900249966662, 0.0},
    {1.9000000000000000, 2.0000000000000000, 0.0, 0.38115060876307224, 0.0},
    {1.9000000000000000, 10.000000000000000, 0.0, 0.25277803253365923, 0.0},
    {1.9000000000000000, 24.000000000000000, 0.0, 0.019572697357541882, 0.0},
    {1.9000000000000000, 26.000000000000000, 0.0, -0.14951051494418466, 0.0},
    {1.9000000000000000, 40.000000000000000, 0.0, 0.018084301996218966, 0.0},
    {1.9000000000000000, 0.50000000000000000, 0.50000000000000000, 0.0092119497998373036, 0.075357076687991553},
    {1.9000000000000000, 3.0000000000000000, 4.0000000000000000, 7.3628524121777790, 0.50896302606143592},
    {1.9000000000000000, 10.000000000000000, 17.000000000000000, 1756284.5809769924, -985997.53324910368},
    {1.9000000000000000, 0.0, 20.000000000000000, -39218625.956064650, 6211620.1223486318},
    {1.9000000000000000, 0.0, 24.000000000000000, -1983565851.9178806, 314165967.30287556},
    {1.9000000000000000, -8.0000000000000000, 3.0000000000000000, -1.0674626865746837, -2.3445108736504600},
    {-1.9000000000000000, 0.30000000000000000, 0.0, -3.5552253548087666, 0.0},
    {-1.9000000000000000, 2.0000000000000000, 0.0, 0.18437433196074251, 0.0},
    {-1.9000000000000000, 10.000000000000000, 0.0, 0.24939136438647984, 0.0},
    {-1.9000000000000000, 24.000000000000000, 0.0, 0.068652825059661844, 0.0},
    {-1.9000000000000000, 26.000000000000000, 0.0, -0.15666380500221085, 0.0},
    {-1.9000000000000000, 40.000000000000000, 0.0, -0.021403417273110194, 0.0},
    {-1.9000000000000000, 0.50000000000000000, 0.50000000000000000, -0.15036463318510981, 0.73171655233384454},
    {-1.9000000000000000, 3.0000000000000000, 4.0000000000000000, 6.8429276636146256, 2.7580238365148618},
    {-1.9000000000000000, 10.000000000000000, 17.000000000000000, 1975015.8893926210, -395017.59656693538},
    {-1.9000000000000000, 0.0, 20.000000000000000, -39218625.956064650, -6211620.1223486318},
    {-1.9000000000000000, 0.0, 24.000000000000000, -1983565851.9178806, -314165967.30287556},
    {-1.9000000000000000, -8.0000000000000000, 3.0000000000000000, -0.29388557934477368, -2.5628795182376568},
};
inline constexpr BesselRef kY[] = {
    {0.0, 0.30000000000000000, 0.0, -0.80727357780451947, 0.0},
    {0.0, 2.0000000000000000, 0.0, 0.51037567264974512, 0.0},
    {0.0, 10.000000000000000, 0.0, 0.055671167283599391, 0.0},
    {0.0, 26.000000000000000, 0.0, 0.012044625860755603, 0.0},
    {0.0, 0.50000000000000000, 0.50000000000000000, -0.22708735805997952, 0.61435025350137482},
    {0.0, 3.0000000000000000, 4.0000000000000000, 4.6047596915010139, -8.8110771408232264},
    {0.0, 0.0, 11.000000000000000, -3.9744303199334170e-6, 7288.4893398212481},
    {0.0, -8.0000000000000000, 3.0000000000000000, -2.4359916845545848, 1.2722522171334186},
    {0.10000000000000000, 0.30000000000000000, 0.0, -0.94827290946739638, 0.0},
    {0.10000000000000000, 2.0000000000000000, 0.0, 0.46998118134346285, 0.0},
    {0.10000000000000000, 10.000000000000000, 0.0, 0.093344389639756318, 0.0},
    {0.10000000000000000, 26.000000000000000, 0.0, -0.012477409746804967, 0.0},
    {0.10000000000000000, 0.50000000000000000, 0.50000000000000000, -0.37501609731910035, 0.62525343740577300},
    {0.10000000000000000, 3.0000000000000000, 4.0000000000000000, 5.9160642634664814, -7.9810144735643974},
    {0.10000000000000000, 0.0, 11.000000000000000, -1139.6265040384572, 7195.3185418632198},
    {0.10000000000000000, -8.0000000000000000, 3.0000000000000000, -2.6038408718884583, 0.87190020143512650},
    {0.25000000000000000, 0.30000000000000000, 0.0, -1.1248456044523288, 0.0},
    {0.25000000000000000, 2.0000000000000000, 0.0, 0.39273839961538506, 0.0},
    {0.25000000000000000, 10.000000000000000, 0.0, 0.14493043908327076, 0.0},
    {0.25000000000000000, 26.000000000000000, 0.0, -0.048393025448817953, 0.0},
    {0.25000000000000000, 0.50000000000000000, 0.50000000000000000, -0.56185076978874691, 0.61685679928181080},
    {0.25000000000000000, 3.0000000000000000, 4.0000000000000000, 7.5594216867348439, -6.3822972413295960},
    {0.25000000000000000, 0.0, 11.000000000000000, -2780.8709834676043, 6713.6164361334845},
    {0.25000000000000000, -8.0000000000000000, 3.0000000000000000, -2.7326574929769888, 0.22600089476789036},
    {0.50000000000000000, 0.30000000000000000, 0.0, -1.3916685091753702, 0.0},
    {0.50000000000000000, 2.0000000000000000, 0.0, 0.23478571040624847, 0.0},
    {0.50000000000000000, 10.000000000000000, 0.0, 0.21170886633139815, 0.0},
    {0.50000000000000000, 26.000000000000000, 0.0, -0.10122866523556049, 0.0},
    {0.50000000000000000, 0.50000000000000000, 0.50000000000000000, -0.77677870290476476, 0.57833093801378328},
    {0.50000000000000000, 3.0000000000000000, 4.0000000000000000, 9.2428614369614505, -3.0850428249153326},
    {0.50000000000000000, 0.0, 11.000000000000000, -5092.5819506673710, 5092.5819506673710},
    {0.50000000000000000, -8.0000000000000000, 3.0000000000000000, -2.5906873013164468, -0.87615571884925693},
    {0.75000000000000000, 0.30000000000000000, 0.0, -1.7328780159297216, 0.0},
    {0.75000000000000000, 2.0000000000000000, 0.0, 0.061936583898982346, 0.0},
    {0.75000000000000000, 10.000000000000000, 0.0, 0.24757063446760385, 0.0},
    {0.75000000000000000, 26.000000000000000, 0.0, -0.13877037289111639, 0.0},
    {0.75000000000000000, 0.50000000000000000, 0.50000000000000000, -0.88749769828582454, 0.56708701136979584},
    {0.75000000000000000, 3.0000000000000000, 4.0000000000000000, 9.4869839753805339, 0.45567399285672579},
    {0.75000000000000000, 0.0, 11.000000000000000, -6555.2766043234314, 2715.2844777351540},
    {0.75000000000000000, -8.0000000000000000, 3.0000000000000000, -2.0106361516197618, -1.8413072730490526},
    {0.90000000000000000, 0.30000000000000000, 0.0, -2.0315076848569194, 0.0},
    {0.90000000000000000, 2.0000000000000000, 0.0, -0.040794165220358671, 0.0},
    {0.90000000000000000, 10.000000000000000, 0.0, 0.25258224033660395, 0.0},
    {0.90000000000000000, 26.000000000000000, 0.0, -0.15165638087966734, 0.0},
    {0.90000000000000000, 0.50000000000000000, 0.50000000000000000, -0.91624746945158375, 0.59505856012385244},
    {0.90000000000000000, 3.0000000000000000, 4.0000000000000000, 8.9794561224587436, 2.4455148195597431},
    {0.90000000000000000, 0.0, 11.000000000000000, -6925.7708367725636, 1096.9343417626423},
    {0.90000000000000000, -8.0000000000000000, 3.0000000000000000, -1.4861201360510925, -2.2771851489634278},
    {1.2500000000000000, 0.30000000000000000, 0.0, -3.2831400702767645, 0.0},
    {1.2500000000000000, 2.0000000000000000, 0.0, -0.26094450109489329, 0.0},
    {1.2500000000000000, 10.000000000000000, 0.0, 0.21744103014167334, 0.0},
    {1.2500000000000000, 26.000000000000000, 0.0, -0.15021179305588372, 0.0},
    {1.2500000000000000, 0.50000000000000000, 0.50000000000000000, -0.90688229457814933, 0.81562464947543959},
    {1.2500000000000000, 3.0000000000000000, 4.0000000000000000, 6.3251462908146190, 6.0401993521989095},
    {1.2500000000000000, 0.0, 11.000000000000000, -6250.1122204062947, -2588.8812447901217},
    {1.2500000000000000, -8.0000000000000000, 3.0000000000000000, 0.031093549056031029, -2.6889717497893491},
};
inline constexpr BesselRef kH1[] = {
    {0.0, 0.0, 3.0000000000000000, 0.0, -0.022115855374555689},
    {0.0, 0.0, 14.000000000000000, 0.0, -1.7579432653856594e-7},
    {0.0, 0.0, 24.000000000000000, 0.0, -6.1171640249753186e-12},
    {0.0, 2.0000000000000000, 20.000000000000000, 3.2366953187911555e-10, 1.6786776388768012e-10},
    {0.0, 10.000000000000000, 17.000000000000000, -5.4989174070399674e-9, 4.9488070556094888e-9},
    {0.0, 17.000000000000000, 17.000000000000000, -6.6712325783601234e-9, -7.3929383797603473e-10},
    {0.0, 30.000000000000000, 30.000000000000000, -9.7786029466119317e-15, -5.9351970621047698e-15},
    {0.0, -9.0000000000000000, 2.0000000000000000, 0.0083688941730720526, 0.034434404656669183},
    {0.0, 2.0000000000000000, 0.0, 0.22389077914123567, 0.51037567264974512},
    {0.0, 26.000000000000000, 0.0, 0.15599931552242113, 0.012044625860755603},
    {0.25000000000000000, 0.0, 3.0000000000000000, -0.0085407346096142375, -0.020619157327159974},
    {0.25000000000000000, 0.0, 14.000000000000000, -6.7418904210039996e-8, -1.6276363290421112e-7},
    {0.25000000000000000, 0.0, 24.000000000000000, -2.3439264901180969e-12, -5.6587391216486758e-12},
    {0.25000000000000000, 2.0000000000000000, 20.000000000000000, 3.6381655019813041e-10, 3.1327539637871401e-11},
    {0.25000000000000000, 10.000000000000000, 17.000000000000000, -3.1959520078659154e-9, 6.6829801786648173e-9},
    {0.25000000000000000, 17.000000000000000, 17.000000000000000, -6.4539220862149429e-9, 1.8659075971843355e-9},
    {0.25000000000000000, 30.000000000000000, 30.000000000000000, -1.1310546850178084e-14, -1.7479993631716710e-15},
    {0.25000000000000000, -9.0000000000000000, 2.0000000000000000, 0.021019898694483929, 0.028568523158382042},
    {0.25000000000000000, 2.0000000000000000, 0.0, 0.39781106433817835, 0.39273839961538506},
    {0.25000000000000000, 26.000000000000000, 0.0, 0.14879550870781256, -0.048393025448817953},
    {0.50000000000000000, 0.0, 3.0000000000000000, -0.016217391109880487, -0.016217391109880487},
    {0.50000000000000000, 0.0, 14.000000000000000, -1.2538289673377438e-7, -1.2538289673377438e-7},
    {0.50000000000000000, 0.0, 24.000000000000000, -4.3476229950518818e-12, -4.3476229950518818e-12},
    {0.50000000000000000, 2.0000000000000000, 20.000000000000000, 3.4974166015961982e-10, -1.1062987717042562e-10},
    {0.50000000000000000, 10.000000000000000, 17.000000000000000, -4.1396851402952436e-10, 7.4263046981023556e-9},
    {0.50000000000000000, 17.000000000000000, 17.000000000000000, -5.2743206808004500e-9, 4.1911395734589044e-9},
    {0.50000000000000000, 30.000000000000000, 30.000000000000000, -1.1140058284527954e-14, 2.7005419125926921e-15},
    {0.50000000000000000, -9.0000000000000000, 2.0000000000000000, 0.030609671477254698, 0.018104231426847118},
    {0.50000000000000000, 2.0000000000000000, 0.0, 0.51301613656182775, 0.23478571040624847},
    {0.50000000000000000, 26.000000000000000, 0.0, 0.11932364893397460, -0.10122866523556049},
    {0.75000000000000000, 0.0, 3.0000000000000000, -0.022171527549136309, -0.0091837474093809679},
    {0.75000000000000000, 0.0, 14.000000000000000, -1.6559729710182711e-7, -6.8592646351903615e-8},
    {0.75000000000000000, 0.0, 24.000000000000000, -5.7167993966662959e-12, -2.3679758434655069e-12},
    {0.75000000000000000, 2.0000000000000000, 20.000000000000000, 2.8308731396750323e-10, -2.3763006508141646e-10},
    {0.75000000000000000, 10.000000000000000, 17.000000000000000, 2.4488495461793107e-9, 7.0763174415653920e-9},
    {0.75000000000000000, 17.000000000000000, 17.000000000000000, -3.3103876707113349e-9, 5.9028960042149950e-9},
    {0.75000000000000000, 30.000000000000000, 30.000000000000000, -9.3000806860316339e-15, 6.7519093351703172e-15},
    {0.75000000000000000, -9.0000000000000000, 2.0000000000000000, 0.035441112417913422, 0.0044649348202111661},
    {0.75000000000000000, 2.0000000000000000, 0.0, 0.56982182917425685, 0.061936583898982346},
    {0.75000000000000000, 26.000000000000000, 0.0, 0.072345065290087668, -0.13877037289111639},
    {0.90000000000000000, 0.0, 3.0000000000000000, -0.024566681997726977, -0.0038909801788408484},
    {0.90000000000000000, 0.0, 14.000000000000000, -1.7855305257207503e-7, -2.8280025299865609e-8},
    {0.90000000000000000, 0.0, 24.000000000000000, -6.1425937424735845e-12, -9.7289127204267751e-13},
    {0.90000000000000000, 2.0000000000000000, 20.000000000000000, 2.2128524665818107e-10, -2.9880342787694781e-10},
    {0.90000000000000000, 10.000000000000000, 17.000000000000000, 4.0353219534509403e-9, 6.3551806378526738e-9},
    {0.90000000000000000, 17.000000000000000, 17.000000000000000, -1.8707221904611150e-9, 6.5297511078969339e-9},
    {0.90000000000000000, 30.000000000000000, 30.000000000000000, -7.5000736652694020e-15, 8.7392508358285235e-15},
    {0.90000000000000000, -9.0000000000000000, 2.0000000000000000, 0.035576389314802073, -0.0043997757838195511},
    {0.90000000000000000, 2.0000000000000000, 0.0, 0.57920025998049510, -0.040794165220358671},
    {0.90000000000000000, 26.000000000000000, 0.0, 0.038676139602226730, -0.15165638087966734},
};
inline constexpr BesselRef kJd[] = {
    {0.0, 2.0000000000000000, 0.0, -0.57672480775687339, 0.0},
    {0.0, 3.0000000000000000, 4.0000000000000000, -3.6541102814142644, 8.4031042565830872},
    {0.0, 0.0, 9.0000000000000000, 0.0, -1030.9147225169564},
    {0.30000000000000000, 2.0000000000000000, 0.0, -0.47288531069274091, 0.0},
    {0.30000000000000000, 3.0000000000000000, 4.0000000000000000, -6.9963743431543738, 5.8186875316341006},
    {0.30000000000000000, 0.0, 9.0000000000000000, 465.85502873799813, -914.29197344359896},
    {0.75000000000000000, 2.0000000000000000, 0.0, -0.21009627031617340, 0.0},
    {0.75000000000000000, 3.0000000000000000, 4.0000000000000000, -8.7607995689514167, 0.080933043793221056},
    {0.75000000000000000, 0.0, 9.0000000000000000, 925.17453983067858, -383.21984196015429},
};
struct GammaRef { double x, g; };
inline constexpr GammaRef kGamma[] = {
    {-1.9900000000000000, 50.470831490356126},
    {-1.5000000000000000, 2.3632718012073547},
    {-0.90000000000000000, -10.570564109631924},
    {-0.50000000000000000, -3.5449077018110321},
    {-0.10000000000000000, -10.686287021193194},
    {-0.010000000000000000, -100.58719796441078},
    {0.10000000000000000, 9.5135076986687318},
    {0.50000000000000000, 1.7724538509055160},
    {0.90000000000000000, 1.0686287021193194},
    {1.0000000000000000, 1.0000000000000000},
    {1.5000000000000000, 0.88622692545275801},
    {2.3000000000000000, 1.1667119051981603},
    {2.9900000000000000, 1.9816683870968568},
    {0.25000000000000000, 3.6256099082219083},
    {1.7500000000000000, 0.91906252684888323},
};
inline constexpr double kJZeros0[] = {2.4048255576957728, 5.5200781102863106, 8.6537279129110122, 11.791534439014282, 14.930917708487786, 18.071063967910923, 21.211636629879259, 24.352471530749303};
inline constexpr double kJZeros025[] = {2.7808877239949776, 5.9061426988424923, 9.0423836635832604, 12.181341528954993, 15.321369826012287, 18.461927245689268, 21.602784448913072, 24.743827796127698};
inline constexpr double kJZeros075[] = {3.4910083741084221, 6.6526355231218287, 9.8016123591398518, 12.947034889138837, 16.090969528199361, 19.234141760482740, 22.376871574815685, 25.519321936574700};
}  // namespace refdata
