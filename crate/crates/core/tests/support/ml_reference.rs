//! Frozen high-precision reference values for `E_{a,b}(z)`.
//!
//! Generated by summing the defining power series with 160-digit decimal
//! arithmetic (mpmath), independent of the routes used in the library.

pub const ML_REFERENCE: &[(f64, f64, f64, f64)] = &[
    (1.0, 1.0, -12.0, 6.1442123533282097587e-6),
    (1.0, 1.0, -37.5, 5.1755550058018685349e-17),
    (1.0, 1.0, -120.0, 7.6676480737219996324e-53),
    (1.0, 1.0, -200.0, 6.5689283270687462985e-76),
    (1.0, 2.0, -12.0, 0.083332821315637222649),
    (1.0, 2.0, -37.5, 0.026666666666666665287),
    (1.0, 2.0, -120.0, 0.0083333333333333333333),
    (1.0, 2.0, -200.0, 0.005),
    (1.0, 1.0, -12.0, 6.1442123533282097587e-6),
    (1.0, 1.0, -37.5, 5.1755550058018685349e-17),
    (1.0, 1.0, -120.0, 7.6676480737219996324e-53),
    (1.0, 1.0, -200.0, 6.5689283270687462985e-76),
    (1.0, 3.0, -12.0, 0.076388931557030231446),
    (1.0, 3.0, -37.5, 0.025955555555555555592),
    (1.0, 3.0, -120.0, 0.0082638888888888888889),
    (1.0, 3.0, -200.0, 0.004975),
    (1.0001, 1.0, -12.0, -4.1354529710735898672e-6),
    (1.0001, 1.0, -37.5, -2.8215362033816713954e-6),
    (1.0001, 1.0, -120.0, -8.4753469563224806289e-7),
    (1.0001, 1.0, -200.0, -5.050481186797358503e-7),
    (1.0001, 2.0, -12.0, 0.083329633009205903998),
    (1.0001, 2.0, -37.5, 0.026665275596753720232),
    (1.0001, 2.0, -120.0, 0.008332866330526515549),
    (1.0001, 2.0, -200.0, 0.0049997163968110584776),
    (1.0001, 1.0001, -12.0, 5.0541982734724236499e-6),
    (1.0001, 1.0001, -37.5, -7.9767749492062743426e-8),
    (1.0001, 1.0001, -120.0, -7.1853534205814576078e-9),
    (1.0001, 1.0001, -200.0, -2.5512713065271296292e-9),
    (1.0001, 3.0, -12.0, 0.076393057433658462293),
    (1.0001, 3.0, -37.5, 0.02595675912464893143),
    (1.0001, 3.0, -120.0, 0.008264249032896324142),
    (1.0001, 3.0, -200.0, 0.0049752142294993706676),
    (1.001, 1.0, -12.0, -0.000096644937724870259349),
    (1.001, 1.0, -37.5, -0.000028202918221814425352),
    (1.001, 1.0, -120.0, -8.4711266218721460054e-6),
    (1.001, 1.0, -200.0, -5.0479202082032520616e-6),
    (1.001, 2.0, -12.0, 0.083300879807260924677),
    (1.001, 2.0, -37.5, 0.026652738826711613685),
    (1.001, 2.0, -120.0, 0.0083286582439603729507),
    (1.001, 2.0, -200.0, 0.0049971609652297701887),
    (1.001, 1.001, -12.0, -4.7734272392954484021e-6),
    (1.001, 1.001, -37.5, -7.9811295554685724418e-7),
    (1.001, 1.001, -120.0, -7.1884025371043164261e-8),
    (1.001, 1.001, -200.0, -2.5523063439171315131e-8),
    (1.001, 3.0, -12.0, 0.076430191259140697618),
    (1.001, 3.0, -37.5, 0.025967587411294094403),
    (1.001, 3.0, -120.0, 0.0082674887458148586757),
    (1.001, 3.0, -200.0, 0.0049771413047292454587),
    (1.01, 1.0, -12.0, -0.0010208937175664600334),
    (1.01, 1.0, -37.5, -0.0002807617850288568027),
    (1.01, 1.0, -120.0, -0.000084283718458128876999),
    (1.01, 1.0, -200.0, -0.000050219955733642951643),
    (1.01, 2.0, -12.0, 0.08300751267371259192),
    (1.01, 2.0, -37.5, 0.026525671265156425766),
    (1.01, 2.0, -120.0, 0.0082860762925318486711),
    (1.01, 2.0, -200.0, 0.0049713094390491578587),
    (1.01, 1.01, -12.0, -0.00010479551724101960649),
    (1.01, 1.01, -37.5, -8.0235409004886657258e-6),
    (1.01, 1.01, -120.0, -7.2180343657730469121e-7),
    (1.01, 1.01, -200.0, -2.562361126616689339e-7),
    (1.01, 3.0, -12.0, 0.076801618965784375516),
    (1.01, 3.0, -37.5, 0.026075486153407747631),
    (1.01, 3.0, -120.0, 0.0082997277092851685996),
    (1.01, 3.0, -200.0, 0.004996313162196410455),
    (1.1, 1.0, -12.0, -0.010048858134930517139),
    (1.1, 1.0, -37.5, -0.002656927986632280287),
    (1.1, 1.0, -120.0, -0.00079454662613366868697),
    (1.1, 1.0, -200.0, -0.00047313133335900424791),
    (1.1, 2.0, -12.0, 0.079433699456244550408),
    (1.1, 2.0, -37.5, 0.025082470770977675313),
    (1.1, 2.0, -120.0, 0.0078102640673295017087),
    (1.1, 2.0, -200.0, 0.0046832264217749019494),
    (1.1, 1.1, -12.0, -0.0012970407010484396043),
    (1.1, 1.1, -37.5, -0.000083175248758446207165),
    (1.1, 1.1, -120.0, -7.4223353456684104762e-6),
    (1.1, 1.1, -200.0, -2.6315502626819498472e-6),
    (1.1, 3.0, -12.0, 0.08052140069702995954),
    (1.1, 3.0, -37.5, 0.027111388549784916587),
    (1.1, 3.0, -120.0, 0.0086048337776351634345),
    (1.1, 3.0, -200.0, 0.0051772681184908399065),
    (1.25, 1.0, -12.0, -0.022024107783450601392),
    (1.25, 1.0, -37.5, -0.005759504986088042955),
    (1.25, 1.0, -120.0, -0.0017300610568131056024),
    (1.25, 1.0, -200.0, -0.0010307640290878255655),
    (1.25, 2.0, -12.0, 0.069996485588724175449),
    (1.25, 2.0, -37.5, 0.02196861468401884674),
    (1.25, 2.0, -120.0, 0.0068202068862389409272),
    (1.25, 2.0, -200.0, 0.0040873422900407059546),
    (1.25, 1.25, -12.0, -0.0047288979156970161209),
    (1.25, 1.25, -37.5, -0.00020341024018058054884),
    (1.25, 1.25, -120.0, -0.000018339483160348003483),
    (1.25, 1.25, -200.0, -6.5099430950457180868e-6),
    (1.25, 3.0, -12.0, 0.086707342165954445959),
    (1.25, 3.0, -37.5, 0.028609982755746450531),
    (1.25, 3.0, -120.0, 0.0090279109713779274063),
    (1.25, 3.0, -200.0, 0.0054261956694437635791),
    (1.5, 1.0, -12.0, -0.038863323267440968184),
    (1.5, 1.0, -37.5, -0.012191591451781280001),
    (1.5, 1.0, -120.0, -0.0023528710865389321234),
    (1.5, 1.0, -200.0, -0.0014100242479369772529),
    (1.5, 2.0, -12.0, 0.032363733508080087578),
    (1.5, 2.0, -37.5, 0.015132922189443688409),
    (1.5, 2.0, -120.0, 0.0047012547012345783791),
    (1.5, 2.0, -200.0, 0.0028208149015133132401),
    (1.5, 1.5, -12.0, -0.042314844901323301126),
    (1.5, 1.5, -37.5, -0.0013498035469180781793),
    (1.5, 1.5, -120.0, -0.000028759567175019853354),
    (1.5, 1.5, -200.0, -0.000010576380744704539967),
    (1.5, 3.0, -12.0, 0.097557834333069656252),
    (1.5, 3.0, -37.5, 0.030126105883798150722),
    (1.5, 3.0, -120.0, 0.0094033993888557299479),
    (1.5, 3.0, -200.0, 0.0056419487173812863922),
    (1.6666666666666667, 1.0, -12.0, -0.15925983824431433271),
    (1.6666666666666667, 1.0, -37.5, -0.045032349042521358232),
    (1.6666666666666667, 1.0, -120.0, -0.0042924702362323157391),
    (1.6666666666666667, 1.0, -200.0, -0.0016950904107621181232),
    (1.6666666666666667, 2.0, -12.0, -0.018501453286964502066),
    (1.6666666666666667, 2.0, -37.5, 0.018541084504522295955),
    (1.6666666666666667, 2.0, -120.0, 0.0028829449530219351736),
    (1.6666666666666667, 2.0, -200.0, 0.0018428431814659720706),
    (1.6666666666666667, 1.6666666666666667, -12.0, -0.11272841167583587434),
    (1.6666666666666667, 1.6666666666666667, -37.5, 0.012303683634064072706),
    (1.6666666666666667, 1.6666666666666667, -120.0, -0.00076831375340977809087),
    (1.6666666666666667, 1.6666666666666667, -200.0, -0.000089291489379129656373),
    (1.6666666666666667, 3.0, -12.0, 0.1088148542543909231),
    (1.6666666666666667, 3.0, -37.5, 0.029919707564889754212),
    (1.6666666666666667, 3.0, -120.0, 0.0093635640595193297799),
    (1.6666666666666667, 3.0, -200.0, 0.0056065941061221467406),
    (1.75, 1.0, -12.0, -0.29864804963509985357),
    (1.75, 1.0, -37.5, 0.018465799166040710026),
    (1.75, 1.0, -120.0, -0.030535668714078956216),
    (1.75, 1.0, -200.0, 0.0022963536057223818021),
    (1.75, 2.0, -12.0, -0.047277607295975645754),
    (1.75, 2.0, -37.5, 0.030294908736676192893),
    (1.75, 2.0, -120.0, 0.0041451309024447136174),
    (1.75, 2.0, -200.0, 0.0018556769823372683),
    (1.75, 1.75, -12.0, -0.14240038377004962923),
    (1.75, 1.75, -37.5, 0.040945360290211264063),
    (1.75, 1.75, -120.0, 0.0020406721125239986533),
    (1.75, 1.75, -200.0, 0.0011812510513126672428),
    (1.75, 3.0, -12.0, 0.11766362663970335991),
    (1.75, 3.0, -37.5, 0.027937497078641081849),
    (1.75, 3.0, -120.0, 0.0092804552675461438361),
    (1.75, 3.0, -200.0, 0.005505045945328941841),
    (1.9, 1.0, -12.0, -0.66880889389331740486),
    (1.9, 1.0, -37.5, 0.54637784277272016988),
    (1.9, 1.0, -120.0, 0.37020383824824833799),
    (1.9, 1.0, -200.0, -0.24242945579593906807),
    (1.9, 2.0, -12.0, -0.085862739134462943106),
    (1.9, 2.0, -37.5, 0.033151810936073744205),
    (1.9, 2.0, -120.0, -0.0071318899463575638257),
    (1.9, 2.0, -200.0, -0.006251335610354767896),
    (1.9, 1.9, -12.0, -0.14076153260533184551),
    (1.9, 1.9, -37.5, 0.053121045489390690342),
    (1.9, 1.9, -120.0, -0.0039444404529167559163),
    (1.9, 1.9, -200.0, -0.012199572929712658278),
    (1.9, 3.0, -12.0, 0.14118673175536874586),
    (1.9, 3.0, -37.5, 0.015305155998173802229),
    (1.9, 3.0, -120.0, 0.0064745495931303892625),
    (1.9, 3.0, -200.0, 0.0062441392532500669995),
    (1.999, 1.0, -12.0, -0.94570470364631323599),
    (1.999, 1.0, -37.5, 0.98390204059121812895),
    (1.999, 1.0, -120.0, -0.027778644082481603467),
    (1.999, 1.0, -200.0, -0.023470289952477083885),
    (1.999, 2.0, -12.0, -0.091538949577780001831),
    (1.999, 2.0, -37.5, -0.025005243789767726395),
    (1.999, 2.0, -120.0, -0.090395086591427798229),
    (1.999, 2.0, -200.0, 0.069857070202349748383),
    (1.999, 1.999, -12.0, -0.092157060476562875248),
    (1.999, 1.999, -37.5, -0.024823470345601155013),
    (1.999, 1.999, -120.0, -0.090624056467031544695),
    (1.999, 1.999, -200.0, 0.070034891030297929258),
    (1.999, 3.0, -12.0, 0.16213898718492017975),
    (1.999, 3.0, -37.5, 0.00049922973717357538692),
    (1.999, 3.0, -120.0, 0.0085820936412821369411),
    (1.999, 3.0, -200.0, 0.0051121957457548625429),
    (2.0, 1.0, -12.0, -0.94844319584182776111),
    (2.0, 1.0, -37.5, 0.98731302038381737804),
    (2.0, 1.0, -120.0, -0.041111547799449951155),
    (2.0, 1.0, -200.0, -0.0049686621325937736153),
    (2.0, 2.0, -12.0, -0.091494764996574326554),
    (2.0, 2.0, -37.5, -0.025929648297182287112),
    (2.0, 2.0, -120.0, -0.091209915425788254495),
    (2.0, 2.0, -200.0, 0.07070980527467927233),
    (2.0, 2.0, -12.0, -0.091494764996574326554),
    (2.0, 2.0, -37.5, -0.025929648297182287112),
    (2.0, 2.0, -120.0, -0.091209915425788254495),
    (2.0, 2.0, -200.0, 0.07070980527467927233),
    (2.0, 3.0, -12.0, 0.16237026632015231343),
    (2.0, 3.0, -37.5, 0.00033831945643153658547),
    (2.0, 3.0, -120.0, 0.0086759295649954162596),
    (2.0, 3.0, -200.0, 0.0050248433106629688681),
    (1.3238327648331625, 1.3016983478490038, -66.55843302682999, -0.00040824676315278890834),
    (1.0724362866675428, 2.0717640086133784, -125.03377203291997, 0.0079992751016869847969),
    (1.0579989247747068, 2.0148714663788407, -192.3133900193931, 0.0050666589556689306462),
    (1.4336456836623859, 1.1397108471492379, -181.40383226450766, -0.0012688115600383932118),
    (1.424519189142514, 2.6537042493440763, -174.62059796432266, 0.0062921777456970921256),
    (1.2232389646070145, 2.254866444811179, -5.719666796313845, 0.19009947974971096719),
    (1.5771029486174988, 1.7933609493015603, 0.1322966465486104, 1.1222781775095123117),
    (1.0465826806177563, 2.716936918097359, -140.63009630200636, 0.0078363148010019979701),
    (1.1442550833574376, 1.2355844761567367, -136.76122605910345, 0.00069627350510747260267),
    (1.8161263591200314, 1.361452759847875, -80.77196644919442, -0.043141247571839997506),
    (1.6389134689261842, 1.7447950854514624, -87.71238452954064, 0.0020192735295897271864),
    (1.0627889749733233, 1.1192023399324653, -157.77846387203806, 0.00036814664527772814407),
    (1.6803999731817858, 1.8551846113388057, -135.59983007275775, 0.00099736580936155473758),
    (1.5855618635076387, 1.9063687527415507, -138.5477656429451, 0.0025839867906007352149),
    (1.7943794815224912, 2.3979888674591425, -149.96021530195867, 0.0051067278136106579708),
    (1.574423710258671, 2.050393007622903, -20.596813407447087, 0.020186333275272576259),
    (1.7294452894392176, 1.575875529780373, 0.9358437359793186, 1.5055773839831689469),
    (1.1180657782549621, 1.8362456435704544, -44.78610943912389, 0.017718012199437204154),
    (1.1519845346605049, 1.9779262009516112, -191.96251230527528, 0.0045910977991195054712),
    (1.6682158565343952, 2.529141732425626, -82.52968224313629, 0.010891178761583204415),
    (1.8754778118308884, 1.6274950256961935, -57.46444991389984, 0.027406399508308582665),
    (1.5943698771050183, 2.1597904085649846, -106.47790708321033, 0.0059416632460821222492),
    (1.8399677805125414, 2.889362190215875, -102.80984082897288, 0.0083932102972177524758),
    (1.6641522054746745, 1.1213388551944394, -56.19413563259309, -0.018365130638758125045),
    (1.6471288545276688, 2.986191878933268, -31.505418745008456, 0.034847744404446176951),
    (1.2845955320941491, 1.7715828848934216, -62.92619324374144, 0.0087795354941555847802),
    (1.0225629280555886, 1.9233905725995317, -165.55008232415838, 0.0056601910982812268046),
    (1.117095794481732, 1.1179088386626208, -42.51223736313324, -0.000055145554490914374668),
    (1.1293402220186843, 1.4952296673938286, -119.85531085768845, 0.0034453136048104128951),
    (1.8714219741262994, 1.1611626024002772, -107.91658280538715, 0.14383560633118848748),
    (1.5494399091440374, 2.7667676528830247, -32.04763324367303, 0.034437575791179381625),
    (1.863984469698515, 1.5568421290277943, -114.86421397160179, 0.038143268697469427007),
    (1.3587711653316248, 2.7683856543964342, -3.6651031873817885, 0.28370463307776390925),
    (1.150920905791109, 1.3524354569807406, -152.44884230199517, 0.0014423465618543998653),
    (1.2333360836808611, 1.9699254606827132, -79.22968173488759, 0.010194240541333954366),
    (1.262746619298538, 1.0081872067701279, -114.11596726930777, -0.0018447899011536610765),
    (1.3692535728947255, 2.132682447412784, -4.61492526735546, 0.2407898924150835566),
    (1.6904936571359779, 2.0309828661415565, -73.39348637112883, 0.0035546625953959216409),
    (1.6762000824495014, 1.1079857864475804, -15.595732938119795, -0.015808284955368456392),
    (1.7799694907060728, 2.749026368268953, -36.43601015470395, 0.024041872364389774715),
];
