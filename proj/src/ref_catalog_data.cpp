// Generated by tests/tools/make_catalog_fixture.py. Do not edit by hand.
#include "cnmf/simulate.hpp"

namespace cnmf::detail {

const char* const kRefCatalogNames[8] = {"REF-A", "REF-B", "REF-C", "REF-E", "REF-D", "REF-F", "REF-G", "REF-H"};

const char* const kRefChannelLabels[96] = {
    "A[C>A]A", "A[C>A]C", "A[C>A]G", "A[C>A]T", "C[C>A]A", "C[C>A]C",
    "C[C>A]G", "C[C>A]T", "G[C>A]A", "G[C>A]C", "G[C>A]G", "G[C>A]T",
    "T[C>A]A", "T[C>A]C", "T[C>A]G", "T[C>A]T", "A[C>G]A", "A[C>G]C",
    "A[C>G]G", "A[C>G]T", "C[C>G]A", "C[C>G]C", "C[C>G]G", "C[C>G]T",
    "G[C>G]A", "G[C>G]C", "G[C>G]G", "G[C>G]T", "T[C>G]A", "T[C>G]C",
    "T[C>G]G", "T[C>G]T", "A[C>T]A", "A[C>T]C", "A[C>T]G", "A[C>T]T",
    "C[C>T]A", "C[C>T]C", "C[C>T]G", "C[C>T]T", "G[C>T]A", "G[C>T]C",
    "G[C>T]G", "G[C>T]T", "T[C>T]A", "T[C>T]C", "T[C>T]G", "T[C>T]T",
    "A[T>A]A", "A[T>A]C", "A[T>A]G", "A[T>A]T", "C[T>A]A", "C[T>A]C",
    "C[T>A]G", "C[T>A]T", "G[T>A]A", "G[T>A]C", "G[T>A]G", "G[T>A]T",
    "T[T>A]A", "T[T>A]C", "T[T>A]G", "T[T>A]T", "A[T>C]A", "A[T>C]C",
    "A[T>C]G", "A[T>C]T", "C[T>C]A", "C[T>C]C", "C[T>C]G", "C[T>C]T",
    "G[T>C]A", "G[T>C]C", "G[T>C]G", "G[T>C]T", "T[T>C]A", "T[T>C]C",
    "T[T>C]G", "T[T>C]T", "A[T>G]A", "A[T>G]C", "A[T>G]G", "A[T>G]T",
    "C[T>G]A", "C[T>G]C", "C[T>G]G", "C[T>G]T", "G[T>G]A", "G[T>G]C",
    "G[T>G]G", "G[T>G]T", "T[T>G]A", "T[T>G]C", "T[T>G]G", "T[T>G]T",
};

const double kRefCatalog[96][8] = {
    {1.0970160602565318e-05, 4.7855689731710455e-05, 0.017120199587706421, 0.0012556523087297459, 0.011536644889777093, 0.0025921060371246868, 0.0040211238140965026, 0.0046739896400030548},
    {1.6376672055114396e-05, 2.1422457048098199e-05, 0.0020755261472700471, 0.00071658026905144744, 0.0047727376023817113, 0.0099794561098174705, 0.00091821621805043981, 0.0024943593679572838},
    {1.964442857370566e-06, 0.0001238694376537227, 0.012131012473849592, 0.00037813885037186074, 0.0048014309286803667, 0.01564194816295017, 6.0222912592665269e-05, 0.01264900197393644},
    {0.00850371524596223, 0.00079627938960034981, 0.011521733420322538, 0.00065910902683382721, 0.0038244841038368223, 0.015497530267587233, 0.00043139434805693954, 0.0025448860785136159},
    {0.00022306718331884586, 0.0030666272487239431, 0.0061678380582749145, 3.8602642370984903e-08, 0.0033849007389535877, 0.036829437713576461, 9.7082331228846153e-05, 0.042251634919202426},
    {0.0011904828432746739, 1.30049143272286e-10, 0.020358579795476412, 0.00023995927065734542, 0.02925917424541704, 0.0032640163155530305, 0.18258134180361629, 0.015844459131807744},
    {1.3419950005860713e-05, 4.1793091745771797e-06, 0.013427409460165175, 0.00059122827327048562, 0.0070332355653824046, 0.0090726252211881225, 0.00096504555652349839, 0.0049917291875650298},
    {0.0012314164622666871, 0.00020435472712333882, 0.006376648749633936, 0.0001504411616722868, 0.0079265685126516747, 0.0033328337050923459, 3.2920711961418726e-09, 0.011525744468163936},
    {0.0026417606563191791, 0.0002846122116390502, 0.0042277355010098584, 0.00040305555720381904, 0.0078601339633270224, 0.0010401171908922752, 2.8253363997022745e-05, 0.029416307736780011},
    {0.00071136584878066852, 5.2316185393613478e-05, 0.015624805998686569, 0.0017950737638594196, 0.0092831369195807128, 0.0022988792511581414, 0.00096244284108902057, 0.08838404708417609},
    {0.00019697895868107839, 0.00079651250484823329, 0.013156434098418863, 0.00019357071305613617, 0.031681049493420321, 0.0057918127585403437, 0.0075429878491178499, 0.0030047093038251173},
    {6.1683201230977383e-05, 0.0039850649432056819, 0.012595866241940494, 6.6358963913660957e-05, 0.010706830869158111, 0.0018220724328096192, 0.0003581425668931071, 0.017987649483834661},
    {0.0037365461084627478, 9.8170829586552852e-07, 0.01121086039665635, 7.4256866051915623e-05, 0.014701478036679771, 0.0040392079992751326, 0.00025937214153987944, 0.01099109710345802},
    {0.00043743337729589498, 0.00072449499467749424, 0.012191131740909269, 2.1922207956325309e-06, 0.027207739324587754, 0.017097663863136117, 0.00024018529552497994, 0.005362997710119749},
    {3.1544663337181088e-06, 0.00019227354257760613, 0.012483929892558691, 0.00018840415443437456, 0.0094737578717092753, 0.0093386678584788767, 7.9464805096239184e-05, 0.018432167821273604},
    {0.00034525921658275287, 0.0014806217662319216, 0.010403411216352194, 7.5717640807004377e-05, 0.0135773112527099, 0.009358123366548822, 0.0014877803214665725, 0.010883151883910187},
    {0.0049710801967289397, 0.0013663716789607417, 0.0048274193896572573, 3.5304219938733697e-07, 0.0047335169050320971, 0.0072885266893816698, 0.00012701086214033443, 0.018169343972799956},
    {2.2673271216055407e-07, 8.040557515211144e-06, 0.0040622439227881021, 0.33102584235125004, 0.0094931962309571689, 0.0041118102575335618, 0.00059508987110094044, 0.004296539261247052},
    {0.00018522362662776138, 3.5969100736918269e-08, 0.018521092538238675, 0.004493482130420578, 0.0045168326644981095, 0.00063900024312948164, 0.00017266486896876681, 0.0068817755695009556},
    {0.0051965833735127635, 8.1670701597032118e-06, 0.0061724511424360654, 0.00092053121294060844, 0.0054448960405787759, 0.014839182821132916, 0.00022901562735973209, 0.009841263003114881},
    {2.0427507257891842e-05, 0.00020732515359389589, 0.01895151204056687, 1.0449748224489403e-07, 0.022479710466987501, 0.00095060245977558635, 0.00088609887013686532, 0.0070199854496453117},
    {9.5290830799500725e-07, 1.581606765027878e-05, 0.0082410889677794127, 0.53165556898134325, 0.0078927051094714838, 0.0063240530130077412, 0.00063223317604590968, 0.0070008685454416367},
    {0.0031982039181023118, 0.0036500297793479984, 0.023346185631172453, 0.0018985793191496428, 0.010543565369826199, 0.0044257327465878809, 0.00023848774394143483, 0.0034540386733264389},
    {0.0001339981251193594, 0.00057910175330503505, 0.015742300245417156, 0.00069669004554154354, 0.010476156226074004, 0.0057988894396124088, 7.1257227734175443e-05, 0.0077280801972447986},
    {3.8644429712536295e-06, 0.00041918897352199444, 0.011450974246410322, 0.0031238170280279182, 0.01230260991986044, 0.0065813322868778015, 9.1489731300270128e-05, 0.0081661763059346359},
    {9.716215065668787e-08, 0.0033573837748234877, 0.0073061421663094929, 0.0035444586691631046, 0.0045674906421092169, 0.003453678603707596, 0.00014623854670031011, 0.0065269518641140898},
    {0.00043537611344267324, 3.3857250105690855e-05, 0.0038992657439432333, 0.00018247087310702988, 0.0072198777795881306, 0.013433460281149737, 0.0014021792979163254, 0.0068062811009146325},
    {1.3602522909354683e-06, 0.0051058154659181232, 0.02434435371544541, 0.0023851526061713455, 0.0083187973621167977, 0.0012129498714193573, 0.00039590301660003869, 0.012909112783907077},
    {0.0047208901195857234, 0.0015499178015854983, 0.0050862812533352328, 7.4014312358648387e-05, 0.011575888792416954, 0.011914567299182163, 0.00075064803927515466, 0.0038128473442226199},
    {0.0024609433158256566, 0.0031181635240787615, 0.0090503704461448835, 1.8803159355410333e-06, 0.0063698449581900346, 0.00077532353940596029, 4.8269310628439903e-05, 0.012909836473562742},
    {4.3352963359100291e-06, 0.00025254370355999275, 0.019054198900081087, 9.8064260860402339e-07, 0.017749882008197035, 0.018386787818448512, 0.0029197956681689778, 0.0060073521123393016},
    {0.00011539456833606949, 0.00062485864167763231, 0.012576743085901164, 4.1299518646513919e-05, 0.011869057403761098, 0.0028485275109360482, 0.0017800494788039471, 0.007254837619767209},
    {0.00051097120261967466, 7.3238951129571376e-05, 0.0070175592865286416, 7.6539471915103709e-05, 0.0057187924911164447, 0.0075241994372640553, 0.0012496216865045865, 0.0058084668179630298},
    {4.908001424296294e-05, 0.36376184521157345, 0.0045424652968762795, 7.6198247466397788e-05, 0.0062171546724812026, 0.026193925677461004, 0.00047152382349491273, 0.015492916264278763},
    {0.15410363849053083, 0.00018743313812868309, 0.017481195591895798, 0.00037877498335519389, 0.01406710015233535, 0.00046195679249206017, 1.2705702869531286e-08, 0.013675856115205701},
    {0.0076772504724370054, 0.0026480551153847459, 0.016763784192939897, 0.00098487944477692224, 0.017111843095150143, 0.0035274518644309661, 0.00093917363375411924, 0.0069354174349464618},
    {0.00035932878500513833, 0.002945212156760588, 0.0056977040107731216, 8.5272762214469505e-08, 0.0041612536724340071, 0.0093700161515439476, 4.9248900609543588e-06, 0.0046480608510093453},
    {1.7360286074911941e-06, 0.54304911827739921, 0.010882093106577347, 0.00088975949361229758, 0.017219506579087288, 0.01340828351973718, 0.0064559104866914767, 0.036667060035859948},
    {0.13208924548555726, 2.1219922325631723e-05, 0.0072521831870675738, 0.0065410031168119743, 0.007894784346139919, 0.02221511995071862, 0.00010424990268170498, 0.011203602519584931},
    {0.0017347302409723301, 0.00086060636294542153, 0.015353616730554194, 0.0026983027039904853, 0.022776974463450755, 0.0097126295719699093, 0.0005153891011652036, 0.0024580054072392507},
    {0.0011832303289012684, 0.00087826637993104013, 0.0039600803659554616, 0.0033928983693607136, 0.0063468114452699849, 0.0087777173764197261, 0.0064294323063346604, 0.0068700810271370054},
    {0.0021402068786528687, 0.0024883452316056412, 0.013057246899646061, 9.5415579448826805e-05, 0.027799238084248532, 0.0056048848654366478, 2.4775706032846837e-05, 0.0062339901495990016},
    {0.33006680733790067, 0.0050537143389489973, 0.0044510257682717136, 0.00047661262116446395, 0.00843212070155837, 0.0066778029219122584, 0.0090431466677782461, 0.01320802340415328},
    {1.5051557268071788e-05, 0.00038707745348987878, 0.018848266158270736, 0.0011462764626584538, 0.0096867641224588161, 0.0053910792614595754, 0.0014978794560082953, 0.0056247856574001623},
    {0.00220437462185998, 4.3540099396907053e-06, 0.010280962756061499, 7.8830976254866148e-05, 0.011007437099598784, 0.01484492037895987, 2.4158918971190372e-05, 0.0035456607032111811},
    {0.00020691457844352836, 0.0028712384652487288, 0.021078981373348855, 0.00075203293489609806, 0.014906239918013467, 0.0059413357181564274, 0.0005763120630035228, 0.022999980678265534},
    {0.27511021998748525, 0.0014946261939016491, 0.0076722412548363523, 0.0014651108614601128, 0.0083711537238598237, 0.010406451332688577, 0.0079204587890117414, 0.0011477810113582892},
    {1.2963830741421614e-06, 7.456878834743549e-05, 0.0087123925038436849, 4.4776422568866665e-08, 0.020122551758413394, 0.029500858346249666, 1.5588691226263856e-05, 0.0019316907552431547},
    {0.0010584739413074435, 1.3107940388531417e-06, 0.014770385226686134, 0.0034158615152801173, 0.016215663445447021, 0.018063076590326296, 0.0015957894183779816, 0.0043086343824990199},
    {0.00052618235753980021, 0.0032704841711476418, 0.012182636917210046, 0.0020721994076953413, 0.011069923821646111, 0.0034148358110305593, 2.6245164763067973e-05, 0.004341481633300337},
    {0.00094226802660467702, 0.0010098585955806594, 0.0081666559968184699, 0.00079979163748731164, 0.0054957530017812495, 0.0044499706611316496, 0.00074716190688174796, 0.0061506446681838817},
    {3.5355359383435604e-07, 0.00083638747735870688, 0.008698614240951261, 9.886366555120145e-05, 0.007652530984167784, 0.011189466110432835, 0.00074937687718072655, 0.0068262609814441159},
    {0.00071700448912860885, 0.00031583745090991972, 0.0097409180047498493, 0.00089486671605025882, 0.012131013633515137, 0.0024599300242357097, 0.00047810960743676728, 0.016930890398104134},
    {0.00015493374041125225, 4.4776136961435526e-05, 0.016604359927225615, 0.00092764563333453786, 0.017597112144338338, 0.00066541543599770944, 0.00027386805623303529, 0.0017563965667930252},
    {0.0001950594206018557, 2.2403922323418332e-05, 0.0093095972063616025, 3.0276265373363197e-08, 0.0059149465811806053, 0.0016390040909838638, 0.00022755990180222961, 0.10112554517744249},
    {0.00014221846139949139, 2.3884386530187611e-05, 0.013429469598516654, 0.0037647334838688674, 0.012377969821829014, 0.0090176985092875941, 0.0018033278453346464, 0.011957563098461743},
    {0.0055397052037851092, 5.1339955550355291e-09, 0.0072392777506585428, 0.00054578629341494374, 0.0077327088536959694, 0.0039531001676168607, 0.00036194518638536576, 0.0034395733912228662},
    {3.4962189219658746e-06, 0.0039219064449254014, 0.012154215772888444, 0.0019703220720493717, 0.0037824542193513958, 0.0033671327771537434, 8.5457913749082575e-09, 0.0041239579739871662},
    {0.010918298526820682, 0.0018383292321828071, 0.0030239617033988569, 0.0022547331716713938, 0.0024201985191223355, 0.011341203511422265, 0.00054840066178728198, 0.0044660697049837949},
    {0.0024797428586290408, 0.0021856929833384865, 0.0042787759688643415, 0.0067840120727748858, 0.0059581762141144934, 0.0015679977616254305, 7.4441611283625676e-06, 0.00092567258229721966},
    {1.5144204553192512e-05, 1.7232961824214525e-06, 0.0048588030976719427, 2.5194617633775754e-05, 0.004029903833097568, 0.060196979272158488, 0.43113388441868883, 0.0098928454787935386},
    {7.101880016531472e-07, 0.0014539146252317773, 0.010911498775494148, 0.0077745533563395586, 0.0056212977340437623, 0.0051141339370214299, 0.0047343713125880095, 0.0025371645355615788},
    {0.0015448311522915619, 1.1052734571274032e-05, 0.012891981035262696, 0.00072361642703245503, 0.023770569386644239, 0.003490586702279514, 0.00099998625141420609, 0.0042339860848920122},
    {0.0019118289266295059, 5.3909651658755076e-05, 0.0072798874005483433, 7.0334506715054377e-05, 0.0107369645606635, 0.046868971873827152, 0.011335852725388547, 0.0025721721592773948},
    {0.0022483391295958061, 0.0014840460017589224, 0.011319444159574393, 0.00032045840597630653, 0.008132444833322575, 0.0015049292431499844, 2.4836948954808936e-10, 0.0040266562097589428},
    {1.3399785000652382e-05, 7.5685572923334159e-05, 0.014986068141440309, 0.00054230649128063975, 0.010389041862976976, 0.0028853772340020141, 0.00064666762223985043, 0.0070465609934749771},
    {0.00052489140674900718, 0.00023129412488157575, 0.0054551104712423524, 0.00037238733689744463, 0.0038950983287369101, 0.0045189333713298828, 0.00026103861348014738, 0.0021681420093003835},
    {0.00091954913669228442, 0.00022783791010315372, 0.0030378826451401687, 0.0028333687583086582, 0.0071124472655755078, 0.0017338598514714211, 0.00027363875032921205, 0.027012185072890046},
    {6.5126570820371019e-05, 0.0028043258718361123, 0.0038803970150996011, 0.00062332500729694613, 0.0048473571076979938, 0.0034299361051510825, 0.0005026072091762337, 0.0021884414682643771},
    {0.00020338283029317625, 0.00044273178043348073, 0.004232821683579688, 0.0059537307787190501, 0.0076341972777804901, 0.0094645381649132842, 0.00018826218698982103, 0.004404970409129759},
    {0.00011254018900978123, 3.1665805422599608e-07, 0.013019527602150891, 0.00014166255696024081, 0.035252605262366316, 0.0060073714243165108, 0.24469987389078734, 0.0067400025340032792},
    {0.0003122953165287987, 0.00084433828905402185, 0.016205248176780537, 0.00066922251162889628, 0.016387825041423866, 0.0047269755986248828, 0.00082880019393139024, 0.01206471243609313},
    {7.9910159609334185e-05, 0.00011605646803124462, 0.025517233841633177, 1.6421604198134979e-06, 0.012906580519779842, 0.014786909688216238, 0.012750385748006814, 0.0083363961940002389},
    {4.7692029744155383e-06, 2.7022755159114134e-07, 0.0093606149918898287, 0.00062729833256143107, 0.010029354053125139, 0.039721607782136639, 1.4880858460012201e-05, 0.0070943517023849103},
    {1.8684967570528021e-05, 0.0020029637885765842, 0.0078155792852625649, 0.00067049734293119553, 0.006632072595243458, 0.027840195341581431, 0.0040442654979944452, 0.010676511031249634},
    {0.0021737175244903309, 0.00073706541721036399, 0.006960269912301505, 0.00013100073695768171, 0.006083272389333848, 0.00049856202360142174, 0.0017436144689207326, 0.0095501366505169327},
    {0.004988129920392043, 3.2585853703507952e-05, 0.0048080974377485586, 0.0096020607412618305, 0.0067431453572133803, 0.022529396715649536, 2.0914469202339769e-05, 0.0028536482484457265},
    {0.0001220532179955781, 1.8428868137087432e-05, 0.010028709176923323, 5.2178085614426092e-05, 0.00720036851757335, 0.011704383286691527, 6.3618934090908815e-05, 0.011491135717751861},
    {0.00017668318574396737, 7.1745339290023199e-05, 0.0051903232432378875, 0.00057861720102557067, 0.0095778062202400201, 0.0078104341876708717, 0.00039123973896397241, 0.0037877152920013},
    {0.00025145679096443441, 0.0003032256746977913, 0.0058058934875628593, 0.00056390209668194177, 0.0048421118745637492, 0.0016907545858843608, 0.0067123763996530545, 0.0024100991371706557},
    {0.0040119149965913469, 0.0005146223123455373, 0.0093740773194922241, 0.0020795785484663499, 0.012749061279844084, 0.0030329053416228904, 0.0002113396931347161, 0.00621234863784204},
    {0.001760501305705691, 7.0086219548076977e-07, 0.0038576558458342943, 0.00020750407481345026, 0.013111956972855353, 0.0039592982659895776, 0.0021434994983448434, 0.0042889334437930709},
    {0.0021630364165259835, 2.1098582138492995e-09, 0.0048658156469167518, 0.00089255758264142337, 0.008034070412214607, 0.0010776325093766188, 0.000482496904171679, 0.0083733663884844062},
    {0.00071628931572246168, 0.00058530898891953869, 0.0089198778815421896, 0.00049483710366103259, 0.002860313932713153, 0.019380404497108216, 0.0010633389998327852, 0.0087480128789895768},
    {0.0014500872196765366, 0.0019350361598402376, 0.011439810223252245, 0.01254957750695028, 0.0075357733565242641, 0.013281782614855728, 0.0003186766135811323, 0.0038961306791842312},
    {0.00051966314995043311, 6.1485165611279603e-06, 0.0038913305430489328, 0.0023893296571643836, 0.0028799162046402459, 0.0049134807011483247, 0.00021191779591258464, 0.0088982328517178445},
    {6.7196818493065691e-06, 0.00076516116771784709, 0.0097120379932977997, 0.0027635131514467531, 0.0089942832854297723, 0.0017574228834971025, 0.0011685642756957778, 0.0063332373178735758},
    {0.00097954443973624216, 0.0012687185025377888, 0.015212280625402102, 1.6867569076420152e-05, 0.015358605131403861, 0.021913903166358342, 0.0025013067693188634, 0.001544464104515774},
    {0.00034165540387921621, 2.4688254026443677e-05, 0.0031848388387359541, 0.00095600080517653085, 0.0087067620301630715, 0.010092155938792128, 2.5454701020408108e-05, 0.026825217409015452},
    {1.3370900173854335e-05, 0.0047839870981583174, 0.0087759983424580829, 0.0030994091679468283, 0.0099881195681660786, 0.016057648988953795, 0.01029431836379697, 0.0066343910166590109},
    {0.00030938019627418115, 0.00023085310787787424, 0.013970511275040755, 0.0034810513959036486, 0.0071080616937350891, 0.0031462772091271794, 0.00073127616581980818, 0.0058026878381538874},
    {0.00052963177645277363, 0.0022425358531560735, 0.0091187099497695313, 0.00014955864253685697, 0.0044463819545747406, 0.069549880908135839, 4.8571894014614658e-05, 0.014334490498007472},
    {0.00056873028556251736, 4.90660446183632e-08, 0.013202976603809251, 0.0081286151421742555, 0.0069731344971826056, 0.0042799130989017182, 1.2517338163559487e-07, 0.0018808203439106637},
    {2.4876269734890254e-05, 0.0015706795223951445, 0.012952165459448446, 4.1981352588847146e-09, 0.0085923014306351006, 0.042815351288695035, 0.0039387254162698612, 0.0035731348150881588},
    {1.7453387377612904e-06, 0.0028032126716760948, 0.012162035547244144, 0.00092416253809031869, 0.01334051068216598, 0.00054950458041580106, 0.00026401342341204865, 0.015357202792456578},
    {9.0378518797760778e-06, 6.8975155699689249e-06, 0.0094380733115273473, 0.00017346101207555388, 0.0047234637826251884, 0.0069992138641817398, 0.0026388078143088993, 0.0011822030565623695},
};

}  // namespace cnmf::detail
