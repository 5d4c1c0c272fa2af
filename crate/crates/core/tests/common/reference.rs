// @generated by tools/gen_reference.py; do not edit by hand.
// High-precision (mpmath, 50 digits) reference values.

pub const LN_GAMMA: &[[f64; 2]] = &[
    [0.21403287757225253, 1.4523196022355545],
    [0.017740947725460057, 4.021896180885279],
    [0.6987710944556033, 0.2623686822370586],
    [0.549820954641112, 0.4803417389040613],
    [655.0691912444913, 3590.56145829096],
    [12.0107625730488, 17.52860220212212],
    [0.0058308815603802565, 5.141249286913121],
    [9.296734235201953, 11.244919010562846],
    [2205.813296344783, 14773.485395690968],
    [0.002123497121352944, 6.153468952893442],
    [4353.822649457149, 32122.7575156658],
    [0.012047277676429663, 4.412081361505294],
    [47.70607518741468, 135.66886418809656],
    [0.0050431244122492455, 5.286839362166613],
    [1.9891450158869304, -0.004551234297057343],
    [8791.75794073172, 71047.58506708306],
    [344.11783000823135, 1663.8676418031541],
    [426.6726009011188, 2155.1550389227837],
    [599.4297214544182, 3232.2311206750264],
    [0.065716927632917, 2.6879089823130795],
    [61.90680981986016, 192.35526308403956],
    [337.49207808300775, 1625.2406562983965],
    [163.0303452997551, 665.8083384420682],
    [0.010697593567977186, 4.531655279302028],
    [6109.172196844215, 47144.38104899153],
    [0.6953986150830026, 0.2665111517804214],
    [0.002716272922112119, 5.90693277252716],
    [66.75981683891105, 212.52457625904623],
    [1.8118614148987262, -0.06765177278335109],
    [1911.253812491188, 12526.39378736941],
    [34.86505726962783, 88.10326033227035],
    [0.363182187822677, 0.8962011377797994],
    [0.012298607318163936, 4.391293964003958],
    [1.124383291703979, -0.05978333343528786],
    [0.07533751047036132, 2.5467961501243614],
    [845.1603899376637, 4848.369661043111],
    [1.038990022585947, -0.02127846225916002],
    [10.233757226910686, 13.331040954703703],
    [12.94341276107058, 19.844403622182057],
    [0.0026056356944296165, 5.948580168165524],
    [0.673621275022739, 0.2940561546699336],
    [0.626665941819186, 0.35841408014326004],
    [0.4704325127222925, 0.6326538482660164],
    [3.8643841689151053, 1.6240539339710076],
    [4.134384606906246, 1.9630933811104088],
    [0.004585140089182837, 5.382305257891469],
    [0.12139766214974435, 2.0500689761383684],
    [0.41271989001861975, 0.7646750414876142],
    [292.652087130314, 1367.3943069712832],
    [0.8911928233339544, 0.07309994397332846],
    [22.47952836712892, 46.85670787382324],
    [61.50188402137094, 190.68930622277733],
    [0.2586851619447081, 1.2519412546350634],
    [32.478428444795746, 79.7464304945197],
    [0.6541836270378911, 0.31984699006956513],
    [47.31506253225436, 134.1633135902397],
    [6.509212253877405, 5.679085866540715],
    [1.4654084643889638, -0.12147939868292265],
    [2.9296523603143507, 0.6292177690571],
    [0.17159432343126896, 1.6859755044885878],
    [0.5, 0.5723649429247001],
    [0.9, 0.06637623973474296],
    [0.97, 0.018067733126021994],
    [1.03, -0.01658685387756976],
    [1.1, -0.04987244125983972],
    [1.6, -0.11259176569675579],
    [1.9, -0.03898427592308333],
    [1.999, -0.00042246180069215375],
    [2.001, 0.0004231067348001636],
    [2.2, 0.09694746679063877],
    [2.5, 0.2846828704729192],
    [3.5, 1.2009736023470743],
    [10.5, 13.940625219403763],
    [170.5, 704.0044277342047],
];

// [s, x, P, Q, ln lower, ln upper]
pub const INC_GAMMA: &[[f64; 6]] = &[
    [
        28.974021492321093,
        29.905099551293212,
        0.5921071475305095,
        0.40789285246949053,
        67.27866047018131,
        66.90597738264235,
    ],
    [
        83.96848649037422,
        76.98204369702447,
        0.2272252369745746,
        0.7727747630254254,
        285.2718830874999,
        286.4959289544129,
    ],
    [
        131.71180712566445,
        270.11314357792514,
        1.0,
        3.090927765970124e-21,
        509.60224299076697,
        462.37642733162306,
    ],
    [
        2.0517703211306983,
        3.395785671719869,
        0.844320933821376,
        0.15567906617862406,
        -0.1464798574889112,
        -1.8372159130687913,
    ],
    [
        0.7288959743248931,
        3.2869420577016206,
        0.9797732943119845,
        0.020226705688015528,
        0.20633744582140667,
        -3.6739799717335475,
    ],
    [
        145.4712167750343,
        1268.063439296882,
        1.0,
        0.0,
        577.4018001817044,
        -235.66018592938894,
    ],
    [
        118.36426445734686,
        232.6220568298297,
        1.0,
        4.808176778387738e-17,
        445.2118973396472,
        407.63826872285694,
    ],
    [
        67.42442524122042,
        390.34611385128335,
        1.0,
        1.5171440599399804e-91,
        215.31499545673347,
        6.196581653837602,
    ],
    [
        2.961119042791732,
        20.991927569682574,
        0.9999998298131734,
        1.7018682662883392e-07,
        0.6575683098997406,
        -14.928800543076594,
    ],
    [
        13.94404827031769,
        120.76727816683166,
        1.0,
        6.576151372443421e-36,
        22.406642139137833,
        -58.60297153223499,
    ],
    [
        0.5122950563054299,
        1.1395828343087178,
        0.8647196174525962,
        0.13528038254740388,
        0.40324138134093296,
        -1.451814398966687,
    ],
    [
        91.27304005059662,
        155.31324095636182,
        0.9999999895660643,
        1.0433935734725428e-08,
        319.3831934154697,
        301.004991134321,
    ],
    [
        116.54580641612311,
        21.13918962317777,
        4.784249999386654e-47,
        1.0,
        329.8966255247073,
        436.5527956227476,
    ],
    [
        103.20601912154562,
        322.41058420016464,
        1.0,
        1.3207107598228537e-46,
        373.93351687245996,
        268.2927726408288,
    ],
    [
        58.09033359263099,
        234.35001967231244,
        1.0,
        7.468077385316585e-44,
        176.76193275524014,
        77.45882625138242,
    ],
    [
        153.30213851955185,
        130.72906449272162,
        0.02911858765789679,
        0.9708814123421032,
        613.0440873647531,
        616.5509149747819,
    ],
    [
        4.942937936364577,
        20.353721420194404,
        0.9999883770312892,
        1.1622968710814158e-05,
        3.0924618679803766,
        -8.2700538652957,
    ],
    [
        47.534573060769986,
        335.37213092997644,
        1.0,
        2.020261432352486e-87,
        135.00811406356715,
        -64.61356210191933,
    ],
    [
        0.6619175537308148,
        1.2688615527833993,
        0.8383292202319123,
        0.1616707797680877,
        0.1331010117891554,
        -1.5127478319703427,
    ],
    [
        3.9730436007480896,
        0.4589045226232398,
        0.0013659439621076506,
        0.9986340560378923,
        -4.837907100264914,
        1.7566355640433995,
    ],
    [
        44.2144500892785,
        24.252757850156136,
        0.0001730754780499903,
        0.99982692452195,
        113.68090010549133,
        122.34250978434069,
    ],
    [
        4.438981403583702,
        7.46842514951545,
        0.9117530239575798,
        0.08824697604242016,
        2.2770688674209225,
        -0.05816084949644753,
    ],
    [
        47.641293527074964,
        174.28533454828042,
        1.0,
        1.4668197420164105e-30,
        135.41920507247355,
        66.72474889901879,
    ],
    [
        152.43406381499824,
        604.7192720270522,
        1.0,
        6.887150806259225e-108,
        612.2172622486319,
        365.467729678833,
    ],
    [
        164.12431845442583,
        1436.2057147390192,
        1.0,
        0.0,
        671.3812829702529,
        -250.21060627789652,
    ],
    [
        23.061337472355884,
        27.105736147980974,
        0.8067490548040345,
        0.1932509451959655,
        48.44750245475094,
        47.01847937393749,
    ],
    [
        105.5770160675762,
        906.0426063301333,
        1.0,
        4.316362602884863e-252,
        384.94283673033425,
        -193.8461936466549,
    ],
    [
        182.10052263839106,
        1402.1666725435991,
        1.0,
        0.0,
        763.9694820127502,
        -89.81505156876685,
    ],
    [
        126.02622753106849,
        301.5092034752874,
        1.0,
        8.607664300331366e-31,
        481.9997214890523,
        412.7722366103284,
    ],
    [
        19.56301597334842,
        37.90365649214723,
        0.9996069059810919,
        0.0003930940189080692,
        38.04635165666977,
        30.205283087126286,
    ],
    [
        4.749085643238932,
        10.521540495168894,
        0.9838053070971452,
        0.016194692902854833,
        2.7909191668222553,
        -1.315825262035292,
    ],
    [
        57.54825751313422,
        78.7956480451776,
        0.9947392964180126,
        0.005260703581987371,
        174.56198386911802,
        169.31976795857977,
    ],
    [
        14.102698307483402,
        5.037016456757967,
        0.0006690215727693097,
        0.9993309784272307,
        15.510174347224085,
        22.819199353820522,
    ],
    [
        1.1268857836897102,
        0.7924169569776449,
        0.4888700885554102,
        0.5111299114445899,
        -0.7764118233642882,
        -0.7318848222417966,
    ],
    [
        162.13591607120256,
        32.601076460936305,
        7.890892115524104e-59,
        1.0,
        527.4705731432407,
        661.2573844322822,
    ],
    [
        31.292541421068563,
        48.77870095761068,
        0.9969154620843257,
        0.0030845379156742843,
        75.6563851356637,
        69.87812102350577,
    ],
    [
        95.19066861464272,
        81.55391789371797,
        0.07549495512430869,
        0.9245050448756913,
        334.5449608742368,
        337.0501535474415,
    ],
    [
        42.97372711144481,
        36.89870352478855,
        0.17803483447386378,
        0.8219651655261362,
        115.94760256452994,
        117.47732135054588,
    ],
    [
        10.19509794549725,
        9.585547286197064,
        0.4642659449473566,
        0.5357340550526434,
        12.475829996553266,
        12.619010323297928,
    ],
    [
        180.50117041322304,
        250.80015317491376,
        0.9999986945990318,
        1.3054009681558117e-06,
        755.6570168176513,
        742.1080178139621,
    ],
    [
        173.99518795627773,
        205.46205302048793,
        0.9886999624403257,
        0.011300037559674314,
        721.9793358135563,
        717.5077509522199,
    ],
    [
        189.36594096329497,
        430.36284160633875,
        1.0,
        1.6060112707584798e-39,
        801.9062477650666,
        712.5791827717056,
    ],
    [
        81.19676430573782,
        150.0014669222679,
        0.9999999997071184,
        2.928815882924756e-10,
        274.5368182032817,
        252.58556547945776,
    ],
    [
        16.09818634537536,
        28.490616584079923,
        0.9954683438540012,
        0.004531656145998857,
        28.164169734083924,
        22.772043878152427,
    ],
    [
        90.44797027696494,
        252.7975660065794,
        1.0,
        1.6992560740149663e-32,
        315.66723682694953,
        242.51470440290527,
    ],
    [
        4.640587275508994,
        1.575505756634904,
        0.0353253134228067,
        0.9646746865771932,
        -0.691731352937599,
        2.615459778130397,
    ],
    [
        156.35360283783538,
        1142.2484197206866,
        1.0,
        3.714675248795656e-296,
        631.9569924452877,
        -48.295903822806906,
    ],
    [
        4.668833714186845,
        4.893677456161011,
        0.6013404021021325,
        0.39865959789786753,
        2.183127255742436,
        1.772074003358166,
    ],
    [
        163.85778824510808,
        715.4716038167533,
        1.0,
        1.9586297182691549e-137,
        670.0228425359433,
        355.2409299011686,
    ],
    [
        1.555518855439479,
        1.786236870206597,
        0.6713839879610802,
        0.32861601203891977,
        -0.5157528042714614,
        -1.2302041073294938,
    ],
    [
        2.084596594026674,
        1.470557052227976,
        0.40616924784978825,
        0.5938307521502117,
        -0.8629512160418238,
        -0.48312680568129274,
    ],
    [
        132.30796654322356,
        976.2038673483679,
        1.0,
        1.1817141465176552e-254,
        512.5109546200861,
        -72.17869294948294,
    ],
    [
        15.032205316304852,
        22.553564294212354,
        0.9616282985479181,
        0.038371701452081915,
        25.238257800198802,
        22.01695005481136,
    ],
    [
        72.04297152397346,
        435.9091181365239,
        1.0,
        1.8419915406049022e-104,
        234.88521210951248,
        -3.972790216551181,
    ],
    [
        2.0999276046867354,
        1.5126467986272634,
        0.4155751970234528,
        0.5844248029765472,
        -0.8326890973770025,
        -0.4917245541403808,
    ],
    [
        20.431336677648076,
        17.789490587387217,
        0.2956015288563357,
        0.7043984711436643,
        39.40717195336462,
        40.27550379844148,
    ],
    [
        3.682284275491674,
        8.09549633644024,
        0.9713574201641787,
        0.028642579835821264,
        1.3783833134482533,
        -2.1454167659274788,
    ],
    [
        4.647322281907381,
        18.654688246170835,
        0.9999707517543278,
        2.9248245672157647e-05,
        2.660985881365431,
        -7.7786758330665124,
    ],
    [
        19.53679254021494,
        3.8758629557947097,
        1.3200051550607265e-08,
        0.9999999867999485,
        19.826414633320155,
        37.96945972213278,
    ],
    [
        138.8351853022094,
        20.586633292431838,
        7.425170727379951e-66,
        1.0,
        394.56585517405824,
        544.5315956336543,
    ],
    [
        68.81173889775326,
        118.76055558439417,
        0.9999997380034581,
        2.619965418537519e-07,
        221.16095044078105,
        206.0060161704737,
    ],
    [
        1.0675793789763752,
        3.989388632043025,
        0.9786449175374683,
        0.02135508246253172,
        -0.05695639160875465,
        -3.881835503408151,
    ],
    [
        4.240970707257333,
        6.095666798558262,
        0.82963519770962,
        0.17036480229038,
        1.9157375953424873,
        0.332693545731362,
    ],
    [
        2.307633285389057,
        1.7957471442364672,
        0.44417692906491896,
        0.555823070935081,
        -0.6527467917180115,
        -0.42851973779366664,
    ],
    [
        121.32616454377347,
        243.6987281339943,
        1.0,
        1.4186432024185566e-18,
        459.3756961970573,
        418.2788654467504,
    ],
    [
        3.019743728971929,
        1.4460964519852242,
        0.17429112708442474,
        0.8257088729155753,
        -1.0355850707373597,
        0.5199301413281977,
    ],
    [
        4.378367823521232,
        6.207107583099847,
        0.8239797418451902,
        0.17602025815480982,
        2.093054453567179,
        0.5495076006658796,
    ],
    [
        60.75292725605403,
        70.24427493726027,
        0.8852730726036253,
        0.11472692739637472,
        187.4931653129427,
        185.4498239191968,
    ],
    [
        1.6252935999738274,
        1.9839031873072213,
        0.699479463826981,
        0.30052053617301894,
        -0.4665496964692422,
        -1.311370040133292,
    ],
    [
        99.861876111065,
        879.6414711416512,
        1.0,
        2.5927285909355627e-247,
        358.4989090387248,
        -209.28689809963157,
    ],
    [
        179.01745794924517,
        36.2624236091531,
        2.7034334993088045e-64,
        1.0,
        601.5873602657449,
        747.9582835858258,
    ],
    [
        0.8092547456245225,
        6.4219691362693485,
        0.9990372810619622,
        0.0009627189380377529,
        0.14226348166897262,
        -6.8025223852595795,
    ],
    [
        35.77356365151942,
        67.32090225672599,
        0.9999905874650098,
        9.412534990213096e-06,
        91.32861040923008,
        79.75515157438392,
    ],
    [
        159.87844221869392,
        166.26525323582277,
        0.7001457491666067,
        0.2998542508333934,
        649.4367158704681,
        648.5887238700498,
    ],
    [
        146.07293656317407,
        24.79494411334261,
        5.787103390576045e-62,
        1.0,
        439.3928842390229,
        580.3975281162158,
    ],
    [
        0.7715322916367187,
        7.627420718173117,
        0.999751130624645,
        0.00024886937535494367,
        0.18023158619900026,
        -8.118101909569319,
    ],
    [
        56.2189359026974,
        249.6800678752319,
        1.0,
        3.702359832591122e-50,
        169.20721010189266,
        55.386925861129484,
    ],
    [
        63.869610013552254,
        107.68078242147664,
        0.9999980007234576,
        1.999276542381315e-06,
        200.46819297503384,
        187.34546980265907,
    ],
    [
        1.1753612964829194,
        0.545789368672392,
        0.3400691826297767,
        0.6599308173702233,
        -1.1564702996238856,
        -0.49348436749814373,
    ],
    [
        148.56415999513604,
        296.36833768164536,
        1.0,
        7.545483287167186e-22,
        592.8267086617864,
        544.1907857600511,
    ],
    [
        2.664555761731271,
        2.639665692360766,
        0.5755654865499538,
        0.4244345134500462,
        -0.14554069708059825,
        -0.45013598311262876,
    ],
    [
        176.26084180586602,
        221.23562699593825,
        0.9992127366591964,
        0.0007872633408035542,
        733.6866959714695,
        726.5405357928207,
    ],
    [
        162.18377557841202,
        116.84381905179366,
        4.2007979817221315e-05,
        0.9999579920201828,
        651.4231228027402,
        661.5007317559578,
    ],
    [
        94.92269295678292,
        651.1337683594777,
        1.0,
        4.650787908881023e-165,
        335.90957444390773,
        -42.47992925209421,
    ],
    [
        38.64966375399917,
        72.938366273275,
        0.999995993317892,
        4.00668210800113e-06,
        101.6908255910893,
        89.26328253415711,
    ],
    [
        143.30502876118211,
        1322.5888760572284,
        1.0,
        0.0,
        566.6379498982553,
        -299.6796107605377,
    ],
    [
        4.232178290521146,
        11.029213009107037,
        0.9936179499925941,
        0.00638205000740589,
        2.084488475130605,
        -2.9633749379775267,
    ],
    [
        65.42902968953577,
        274.46121716215504,
        1.0,
        1.4032943340045166e-52,
        206.95725055705552,
        87.56164828950956,
    ],
    [
        153.3865293720036,
        1460.1913528825307,
        1.0,
        0.0,
        617.0049031110902,
        -349.7437855932896,
    ],
    [
        94.21023717000489,
        498.02608265443973,
        1.0,
        5.414864715889151e-110,
        332.67217255153804,
        81.07696021911858,
    ],
    [
        191.11089623508235,
        124.12468830552295,
        1.50171690254785e-08,
        0.9999999849828309,
        793.0455902501689,
        811.0596619238544,
    ],
    [
        3.6969916088751247,
        23.74762613242169,
        0.999999932724748,
        6.727525208641764e-08,
        1.4245624084600155,
        -15.089910917501252,
    ],
    [
        19.905626560500593,
        0.4458957288421378,
        3.7243702116110035e-26,
        1.0,
        -19.492540343174667,
        39.059774307841515,
    ],
    [
        4.8584315995339,
        15.935534587803428,
        0.9996525913762929,
        0.0003474086237070454,
        2.9667289634739387,
        -4.997932448440743,
    ],
    [
        163.71214568225815,
        265.5488682682511,
        0.9999999999928866,
        7.113424564608768e-12,
        669.2807210801215,
        643.6116837467134,
    ],
    [
        97.250783675231,
        169.97113779010763,
        0.9999999994761377,
        5.238622408219304e-10,
        346.52570055638137,
        325.15590819153886,
    ],
    [
        149.32000377095903,
        1060.8786961339576,
        1.0,
        9.898966872695233e-272,
        596.6060754382219,
        -27.40463946075697,
    ],
    [
        131.08165394792414,
        162.10107824434238,
        0.9946074754488864,
        0.005392524551113635,
        506.5252108209095,
        501.3078763107183,
    ],
    [
        31.866305177000342,
        184.20759759218217,
        1.0,
        1.930152784366666e-44,
        77.63125656335234,
        -23.024888365717807,
    ],
    [
        138.59505708802732,
        0.4888145320155725,
        3.9024465733097346e-282,
        1.0,
        -104.61934406173879,
        543.3480484796438,
    ],
    [
        2.393367922618922,
        2.854080432022366,
        0.6895813387290499,
        0.31041866127095014,
        -0.15913004761291322,
        -0.9572927990126209,
    ],
    [
        2.888546416424664,
        2.341103383929116,
        0.4425803843908949,
        0.5574196156091051,
        -0.22234435018192297,
        0.008351847917818114,
    ],
    [
        126.16364564218414,
        106.61074322243945,
        0.035167359524954846,
        0.9648326404750451,
        479.316235175002,
        482.6280714655555,
    ],
    [
        4.868374331693139,
        9.805324963576666,
        0.9706389066687021,
        0.029361093331297893,
        2.951945389711524,
        -0.5463386897715923,
    ],
    [
        180.33432023771263,
        165.52884929195406,
        0.13366836339359636,
        0.8663316366064037,
        752.7782549685907,
        754.6471609237715,
    ],
    [
        154.9243883593784,
        160.76603102572707,
        0.6880234877622098,
        0.3119765122377902,
        624.373645456752,
        623.5827503838988,
    ],
    [
        73.69795593974379,
        339.8368132679426,
        1.0,
        2.7934544395018856e-69,
        241.97149859996,
        84.12040616368719,
    ],
    [
        2.060006182441334,
        4.085663987517367,
        0.9080985391147753,
        0.09190146088522463,
        -0.06988587987265538,
        -2.3605218501385985,
    ],
    [
        1.5192197019620866,
        0.66415323759643,
        0.2710999320954476,
        0.7289000679045524,
        -1.425177000393153,
        -0.4361278648713885,
    ],
    [
        135.74304749033368,
        64.50403066377088,
        7.67288629061612e-15,
        0.9999999999999923,
        496.8220753734324,
        529.3231589146741,
    ],
    [
        150.7364414004253,
        625.1248290102881,
        1.0,
        1.2746606618558243e-115,
        603.6988631843216,
        339.1442574856291,
    ],
    [
        1.2626969394138476,
        3.6360514561681483,
        0.9565383654228137,
        0.0434616345771863,
        -0.14549811873686214,
        -3.236940431837101,
    ],
    [
        1.8311058329874539,
        8.12678281613692,
        0.9980265088340871,
        0.0019734911659129014,
        -0.0638404799498438,
        -6.289816178111059,
    ],
    [
        126.51392179459496,
        49.18043171270957,
        2.697092358154124e-20,
        1.0,
        439.29793107986865,
        484.3574586514048,
    ],
    [
        62.998173068541384,
        197.770062686068,
        1.0,
        1.3633880790919828e-29,
        196.8586270142356,
        130.39363215380183,
    ],
    [
        1.2406317460059613,
        3.7063624252331655,
        0.9608776584412009,
        0.03912234155879913,
        -0.1359964544286878,
        -3.3371498496091667,
    ],
    [
        144.99450430879875,
        908.0125064960733,
        1.0,
        8.842623543475058e-219,
        575.0302075098209,
        72.94365575767975,
    ],
    [
        4.102373288111682,
        5.050577671451677,
        0.7253531337606878,
        0.27464686623931217,
        1.600728866412834,
        0.6295563988026902,
    ],
    [
        109.23601045000973,
        65.51339151967184,
        5.008679086325746e-07,
        0.9999994991320914,
        387.530404204196,
        402.03732712937665,
    ],
    [
        0.5752567043985457,
        1.837418721665314,
        0.9320722473797075,
        0.06792775262029255,
        0.36714792471752555,
        -2.2518177267138646,
    ],
    [
        116.48682030067809,
        172.29215440806462,
        0.9999973029068637,
        2.6970931362541383e-06,
        436.27238862912196,
        423.4490553450951,
    ],
    [
        1.9652571386119093,
        4.002046231808855,
        0.9123530925527664,
        0.08764690744723358,
        -0.10602484445887887,
        -2.448735594722107,
    ],
    [
        186.35150136958478,
        1836.3071573211876,
        1.0,
        0.0,
        786.1316387218976,
        -443.1894172228913,
    ],
    [
        72.95499412485559,
        501.2215643873972,
        1.0,
        9.262397005879714e-128,
        238.78561661494203,
        -53.719312417208606,
    ],
    [
        124.35666756074141,
        25.273208959967047,
        4.2301666299320355e-45,
        1.0,
        371.7686086158069,
        473.9426964158377,
    ],
    [
        2.757809373255405,
        6.16963584547471,
        0.9582476607286122,
        0.04175233927138773,
        0.43897408273610916,
        -2.6943767001508405,
    ],
    [
        74.98874996934094,
        163.16126947046345,
        0.9999999999999959,
        4.062186503043789e-15,
        247.52441823885542,
        214.38736322014142,
    ],
    [
        109.65215476712547,
        42.664687987471346,
        8.534066154414225e-18,
        1.0,
        364.6869273233526,
        403.9893930606449,
    ],
    [
        56.85816013257148,
        469.0795883018363,
        1.0,
        8.784708955605295e-130,
        171.78075731537953,
        -125.38229218245391,
    ],
    [
        71.6388473582521,
        87.0031040838624,
        0.9589270917930934,
        0.04107290820690661,
        233.118681384907,
        229.96821507459592,
    ],
    [
        108.28267383473909,
        207.3033515457842,
        0.9999999999999859,
        1.4125937616304376e-14,
        397.5713936666345,
        365.6806299264686,
    ],
    [
        8.374379779810603,
        21.40258695062424,
        0.9995510428515686,
        0.0004489571484313577,
        9.288506915992622,
        1.580372861383916,
    ],
    [
        0.8573296903985134,
        0.560725631991557,
        0.5027174909041351,
        0.4972825090958649,
        -0.58734461551397,
        -0.5982146861617912,
    ],
    [
        57.954788593274166,
        22.37529276169271,
        2.639491340296158e-10,
        0.9999999997360509,
        154.15741401328341,
        176.212678718496,
    ],
    [
        37.02990931456271,
        65.52639607220073,
        0.9999497244847968,
        5.0275515203156954e-05,
        95.82725059488193,
        85.92930849700372,
    ],
    [
        105.32333846396155,
        126.27264740944274,
        0.9745164228964389,
        0.02548357710356104,
        383.7365368151436,
        380.0926296532295,
    ],
    [
        77.48986771105542,
        202.00946620820852,
        1.0,
        4.090140809408285e-24,
        258.34740279952854,
        204.49393996486174,
    ],
    [
        4.405997569605462,
        1.3250463613489496,
        0.026652744024926324,
        0.9733472559750737,
        -1.30057629374245,
        2.2972725062341106,
    ],
    [
        11.329495113650877,
        18.614013256262034,
        0.9723511760348634,
        0.02764882396513657,
        15.85637814890223,
        12.296244311632512,
    ],
    [
        47.55017201274031,
        354.89432578845725,
        1.0,
        9.558428802037089e-95,
        135.06818668148716,
        -81.41997379064236,
    ],
    [
        22.524186436936457,
        28.250844877526962,
        0.8822333155545383,
        0.1177666844454617,
        46.869456740668866,
        44.85570560620006,
    ],
    [
        0.6935574646249327,
        5.461912618693355,
        0.9981608265300567,
        0.0018391734699432865,
        0.2669455286655284,
        -6.0296526139085005,
    ],
    [
        197.6758209649627,
        1634.590262078046,
        1.0,
        0.0,
        845.6388381913531,
        -179.22875992117602,
    ],
    [
        24.66256890724227,
        144.68936857517704,
        1.0,
        1.0854058625327049e-35,
        53.707708299652346,
        -26.80081597124197,
    ],
    [
        0.5909487659069975,
        3.0548015613131425,
        0.9821518274678505,
        0.017848172532149587,
        0.3943191837366886,
        -3.6135255992896105,
    ],
    [
        20.685988805998083,
        31.757101225250803,
        0.9849971559555025,
        0.015002844044497431,
        41.37443843261654,
        37.190039464899776,
    ],
    [
        3.195032726213487,
        7.060850485640411,
        0.9645612697947233,
        0.03543873020527661,
        0.8443659191736638,
        -2.4595021404114523,
    ],
    [
        3.3606492159454118,
        21.70442571045295,
        0.9999997909139573,
        2.090860426619996e-07,
        1.0505051351889103,
        -14.330014638048635,
    ],
    [
        10.046005815329153,
        54.484241058768056,
        0.9999999999999671,
        3.2836203082634137e-14,
        12.905532309084435,
        -18.141712426603746,
    ],
    [
        138.48380732611372,
        511.8095815904634,
        1.0,
        3.827484614275348e-86,
        542.7998606559927,
        346.1197504872621,
    ],
    [
        67.51332706335613,
        134.6234574388258,
        0.9999999999416167,
        5.838329348397123e-11,
        215.68875980384234,
        192.12476846640044,
    ],
    [
        0.5907686970312187,
        1.1796747958166294,
        0.845230005865908,
        0.15476999413409195,
        0.24446554252984218,
        -1.4532031380557981,
    ],
    [
        195.32575603300302,
        1812.2785386582354,
        1.0,
        0.0,
        833.234928097904,
        -354.2672593504569,
    ],
    [
        37.787670844663545,
        49.39796658276024,
        0.9622101031573885,
        0.0377898968426115,
        98.5231326832111,
        95.28594164154529,
    ],
    [
        3.84614306624601,
        9.255614385104288,
        0.985097194526136,
        0.014902805473864064,
        1.5868910712107827,
        -2.6042997576749207,
    ],
    [
        188.05104073040982,
        226.23257883478706,
        0.9958469512583014,
        0.004153048741698627,
        795.0152310312152,
        789.5354801499165,
    ],
    [
        175.2027364303403,
        781.6623784693821,
        1.0,
        2.2235972268634612e-152,
        728.2211953710763,
        379.0273874929395,
    ],
    [
        2.3465009855487295,
        2.719597302606833,
        0.6730994824694989,
        0.32690051753050114,
        -0.21318843536125,
        -0.9354256766263872,
    ],
    [
        23.035162069381315,
        18.72557846079897,
        0.18665465522799202,
        0.813345344772008,
        46.902194209271634,
        48.3740898609462,
    ],
    [
        123.75502802418674,
        455.72896796515704,
        1.0,
        1.0296781342199655e-76,
        471.0447822658458,
        296.07756146065583,
    ],
    [
        31.55341625195534,
        59.34474188279308,
        0.9999709815117038,
        2.90184882961909e-05,
        76.55464788068952,
        66.10709949594161,
    ],
    [
        60.791273624834126,
        84.43714545297496,
        0.9970346739837068,
        0.002965326016293151,
        187.7692319001741,
        181.95143333380838,
    ],
    [
        130.39930237176534,
        219.08767748452135,
        0.9999999999631364,
        3.686362991702946e-11,
        503.2079861678308,
        479.18419047781913,
    ],
    [
        165.88223280807347,
        299.94093811919396,
        1.0,
        1.062151165363842e-17,
        680.3517920536949,
        641.2681417257537,
    ],
    [
        80.68029237115722,
        67.7383040119748,
        0.0683267237635385,
        0.9316732762364615,
        269.5873443093986,
        272.20002554026445,
    ],
    [
        4.717323131698683,
        14.674030407135621,
        0.9992409059310894,
        0.0007590940689105884,
        2.7605819571520396,
        -4.4220435108109655,
    ],
    [
        177.9363135295647,
        354.2383328074142,
        1.0,
        1.3068143664583895e-25,
        742.3561678581514,
        685.0591329276014,
    ],
    [
        142.85321040471115,
        82.43097623641238,
        1.0363152579601019e-09,
        0.9999999989636847,
        543.7093821821132,
        564.3969766174265,
    ],
    [
        135.8655413559936,
        103.35142893441267,
        0.001263322713009005,
        0.998736677286991,
        523.2502910983129,
        529.9230369321156,
    ],
    [
        2.2875079593621366,
        0.27986876950673323,
        0.01690799563013941,
        0.9830920043698606,
        -3.93323249663996,
        0.12968359036544694,
    ],
    [
        4.451261621837399,
        2.838763993761681,
        0.2360957602315448,
        0.7639042397684552,
        0.9428240712919809,
        2.1170290255667332,
    ],
    [
        59.805543396176375,
        42.24047451569716,
        0.0062525824468438376,
        0.9937474175531562,
        178.66483888544727,
        183.73332738282056,
    ],
    [
        83.10190941484981,
        433.80329127052767,
        1.0,
        2.222675941247498e-95,
        282.9240619193389,
        64.9771899338431,
    ],
    [
        4.0585334844949985,
        3.3164142992605874,
        0.4111205409865716,
        0.5888794590134284,
        0.9768991520240504,
        1.336234202535831,
    ],
    [
        91.0836203025218,
        129.21435713844733,
        0.999826656229118,
        0.00017334377088199768,
        318.5292440238019,
        309.86918356235554,
    ],
    [
        78.65742959274125,
        99.1706126529457,
        0.9851722067727381,
        0.014827793227261868,
        263.4127887459509,
        259.216475631291,
    ],
    [
        87.39732899556506,
        200.41572991569416,
        1.0,
        8.494677717924908e-20,
        301.9940067007671,
        258.0817446574358,
    ],
    [
        173.2611777877908,
        86.96064110245847,
        2.445291157572836e-16,
        0.9999999999999998,
        682.26039033307,
        718.2075876222858,
    ],
    [
        4.029552844020136,
        5.259883081141901,
        0.765121805394608,
        0.23487819460539205,
        1.5612846820799884,
        0.38031669713136257,
    ],
    [
        105.16003993350434,
        41.98179356731899,
        2.0312003951745152e-16,
        0.9999999999999998,
        346.8700329172435,
        383.0027674591877,
    ],
    [
        101.67093273705066,
        539.0454782423072,
        1.0,
        4.635117715188646e-119,
        366.8347186360716,
        94.36075416549569,
    ],
    [
        33.5879573255881,
        314.13637299324233,
        1.0,
        4.83366291295392e-92,
        83.61008942839842,
        -126.6521345797331,
    ],
    [
        190.35214460656695,
        40.48452030989585,
        4.818320774548114e-65,
        1.0,
        658.9819439466504,
        807.077549510925,
    ],
    [
        81.64488775162255,
        115.06865598264876,
        0.9995568748099257,
        0.00044312519007431127,
        276.5051947215551,
        268.7839797132168,
    ],
    [
        14.888208244888938,
        135.2173045129524,
        1.0,
        1.2823333481092755e-40,
        24.892683160301736,
        -66.96203921283535,
    ],
    [
        4.671212969560072,
        23.81654158038258,
        0.9999995925028359,
        4.074971641470775e-07,
        2.6951239956616866,
        -12.018107460279051,
    ],
    [
        186.58015949945872,
        233.92824409759857,
        0.9993896869749866,
        0.0006103130250133682,
        787.3258959352128,
        779.924967857898,
    ],
    [
        2.538900907702189,
        3.716191954151779,
        0.8029294393026732,
        0.19707056069732679,
        0.09291658990313857,
        -1.3117884080918347,
    ],
    [
        34.33679948880484,
        54.13100754692869,
        0.9983619830002393,
        0.0016380169997607156,
        86.23721414230063,
        79.8245845870762,
    ],
    [
        162.51248446630805,
        247.03512557261487,
        0.9999999958897141,
        4.110285935989686e-09,
        663.1728040615648,
        643.8630308256172,
    ],
    [
        3.465778857350874,
        0.5229573591913571,
        0.006380942711839939,
        0.99361905728816,
        -3.8910229449360285,
        1.1570150991819959,
    ],
    [
        25.273012803066262,
        49.58115581990076,
        0.9999471779672174,
        5.2822032782540066e-05,
        55.65948954938659,
        45.81096020607032,
    ],
    [
        4.943801574797251,
        29.138742516756718,
        0.9999999931156033,
        6.88439673291496e-09,
        3.093763332626813,
        -15.700244989585137,
    ],
    [
        98.57149820960397,
        41.462072594120784,
        3.672604683446461e-14,
        0.9999999999999633,
        321.6378794579004,
        352.57316962647485,
    ],
    [
        1.413587492607184,
        9.285207690755003,
        0.9997258837236261,
        0.0002741162763738677,
        -0.12062689040253675,
        -8.322310911815572,
    ],
    [
        154.05516464771813,
        149.24345768675963,
        0.3576118501282846,
        0.6423881498717154,
        619.3410893575177,
        619.9268338926368,
    ],
    [
        137.39616890112055,
        94.21951897686854,
        1.804233151381957e-05,
        0.9999819576684862,
        526.5224235256259,
        537.4451952934697,
    ],
    [
        62.130793069462634,
        183.76169077223338,
        1.0,
        6.972852952336591e-26,
        193.2779292223147,
        135.35274126433697,
    ],
    [
        30.672201321177706,
        29.208794455158287,
        0.41758181407824596,
        0.582418185921754,
        72.66638827877459,
        72.99909651403979,
    ],
    [
        42.89915438623498,
        153.9874021770975,
        1.0,
        8.529047690438908e-27,
        117.39387776817107,
        57.36755797021595,
    ],
];

pub const BESSEL_I_SCALED: &[[f64; 3]] = &[
    [-0.5, 1e-08, 7978.845528240198],
    [-0.5, 0.001, 25.206119109494143],
    [-0.5, 0.5, 0.7717433322580537],
    [-0.5, 1.0, 0.4529332469146207],
    [-0.5, 1.999, 0.28734372685891507],
    [-0.5, 2.0, 0.2872615381124012],
    [-0.5, 3.0, 0.23090036256424204],
    [-0.5, 7.5, 0.14567316864069058],
    [-0.5, 10.0, 0.1261566263610362],
    [-0.5, 35.0, 0.06743355313447355],
    [-0.5, 50.0, 0.05641895835477563],
    [-0.5, 200.0, 0.028209479177387815],
    [-0.5, 700.0, 0.015078600877302686],
    [-0.5, 5000.0, 0.005641895835477563],
    [-0.5, 100000.0, 0.00126156626101008],
    [-0.25, 1e-08, 97.04511948615645],
    [-0.25, 0.001, 5.4517954608979435],
    [-0.25, 0.5, 0.7593583077030264],
    [-0.25, 1.0, 0.48477419866905697],
    [-0.25, 1.999, 0.30531599346810223],
    [-0.25, 2.0, 0.30522070668606444],
    [-0.25, 3.0, 0.24014993534572035],
    [-0.25, 7.5, 0.14765043612898018],
    [-0.25, 10.0, 0.12741199306529605],
    [-0.25, 35.0, 0.06761708799910267],
    [-0.25, 50.0, 0.05652592555286948],
    [-0.25, 200.0, 0.028222738715791607],
    [-0.25, 700.0, 0.015080621912806277],
    [-0.25, 5000.0, 0.005642001632597159],
    [-0.25, 100000.0, 0.0012615674437349178],
    [0.0, 1e-08, 0.9999999900000001],
    [0.0, 0.001, 0.9990007495835156],
    [0.0, 0.5, 0.6450352704491501],
    [0.0, 1.0, 0.46575960759364043],
    [0.0, 1.999, 0.3086016010248046],
    [0.0, 2.0, 0.30850832255367105],
    [0.0, 3.0, 0.2430003541618254],
    [0.0, 7.5, 0.14831583007739552],
    [0.0, 10.0, 0.1278333371634286],
    [0.0, 35.0, 0.06767837835041363],
    [0.0, 50.0, 0.05656162664745419],
    [0.0, 200.0, 0.028227159949111916],
    [0.0, 700.0, 0.015081295651531358],
    [0.0, 5000.0, 0.005642036898744589],
    [0.0, 100000.0, 0.0012615678379767768],
    [0.3, 1e-08, 0.003603053574739675],
    [0.3, 0.001, 0.11382469969751624],
    [0.3, 0.5, 0.46760586418093303],
    [0.3, 1.0, 0.40054527739459045],
    [0.3, 1.999, 0.2947870896929148],
    [0.3, 2.0, 0.294711254103063],
    [0.3, 3.0, 0.23789491455138187],
    [0.3, 7.5, 0.14735858958891782],
    [0.3, 10.0, 0.12722706016846264],
    [0.3, 35.0, 0.06759013800932809],
    [0.3, 50.0, 0.05651022426050099],
    [0.3, 200.0, 0.028220793592890356],
    [0.3, 700.0, 0.01508032547730707],
    [0.3, 5000.0, 0.005641986115562129],
    [0.3, 100000.0, 0.0012615672702685388],
    [0.5, 1e-08, 7.978845528240198e-05],
    [0.5, 0.001, 0.0252061107074578],
    [0.5, 0.5, 0.3566358348374589],
    [0.5, 1.0, 0.3449513138882446],
    [0.5, 1.999, 0.2769869569995499],
    [0.5, 2.0, 0.27692804543535515],
    [0.5, 3.0, 0.22975850339753862],
    [0.5, 7.5, 0.14567307951719718],
    [0.5, 10.0, 0.1261566258409798],
    [0.5, 35.0, 0.06743355313447355],
    [0.5, 50.0, 0.05641895835477563],
    [0.5, 200.0, 0.028209479177387815],
    [0.5, 700.0, 0.015078600877302686],
    [0.5, 5000.0, 0.005641895835477563],
    [0.5, 100000.0, 0.00126156626101008],
    [1.0, 1e-08, 4.99999995e-09],
    [1.0, 0.001, 0.0004995003123542213],
    [1.0, 0.5, 0.1564208031848717],
    [1.0, 1.0, 0.20791041534970844],
    [1.0, 1.999, 0.21528367593867836],
    [1.0, 2.0, 0.21526928924893765],
    [1.0, 3.0, 0.19682671329730086],
    [1.0, 7.5, 0.1380412115485542],
    [1.0, 10.0, 0.12126268138445552],
    [1.0, 35.0, 0.06670443172949143],
    [1.0, 50.0, 0.0559931238928954],
    [1.0, 200.0, 0.02815650339483292],
    [1.0, 700.0, 0.015070519444716848],
    [1.0, 5000.0, 0.005641472666838886],
    [1.0, 100000.0, 0.0012615615301218171],
    [1.5, 1e-08, 2.659615176080066e-13],
    [1.5, 0.001, 8.402036342350194e-06],
    [1.5, 0.5, 0.05847166258313577],
    [1.5, 1.0, 0.1079819330263761],
    [1.5, 1.999, 0.1487809669792003],
    [1.5, 2.0, 0.14879751539472358],
    [1.5, 3.0, 0.1543141947650625],
    [1.5, 7.5, 0.12625009137173093],
    [1.5, 10.0, 0.1135409637769382],
    [1.5, 35.0, 0.0655068801877743],
    [1.5, 50.0, 0.055290579187680114],
    [1.5, 200.0, 0.028068431781500876],
    [1.5, 700.0, 0.01505706001890654],
    [1.5, 5000.0, 0.005640767456310467],
    [1.5, 100000.0, 0.00126155364534747],
    [2.5, 1e-08, 5.319230352160132e-22],
    [2.5, 0.001, 1.6804072204584045e-09],
    [2.5, 0.5, 0.005805859338644327],
    [2.5, 1.0, 0.021005514809116315],
    [2.5, 1.999, 0.05370386498474207],
    [2.5, 2.0, 0.05373177234326974],
    [2.5, 3.0, 0.07544430863247611],
    [2.5, 7.5, 0.0951730429685048],
    [2.5, 10.0, 0.09209433670789835],
    [2.5, 35.0, 0.06181867768980717],
    [2.5, 50.0, 0.05310152360351482],
    [2.5, 200.0, 0.027788452700665302],
    [2.5, 700.0, 0.015014070620078802],
    [2.5, 5000.0, 0.005638511375003777],
    [2.5, 100000.0, 0.0012615284144007195],
    [3.7, 1e-08, 1.252516213493822e-32],
    [3.7, 0.001, 3.9568454666702723e-14],
    [3.7, 0.5, 0.00023582704520573277],
    [3.7, 1.0, 0.0019341180977711825],
    [3.7, 1.999, 0.010796791545195077],
    [3.7, 2.0, 0.010808195841003058],
    [3.7, 3.0, 0.02291753892626256],
    [3.7, 7.5, 0.056913241260653336],
    [3.7, 10.0, 0.06267742715232685],
    [3.7, 35.0, 0.05550699958250759],
    [3.7, 50.0, 0.04925926396956779],
    [3.7, 200.0, 0.02727511080810292],
    [3.7, 700.0, 0.014934436687289785],
    [3.7, 5000.0, 0.005634317463708045],
    [3.7, 100000.0, 0.0012614814861819396],
    [4.5, 1e-08, 8.443222781206559e-40],
    [4.5, 0.001, 2.6673129790658174e-17],
    [4.5, 0.5, 2.2890584949340592e-05],
    [4.5, 1.0, 0.000325001943554587],
    [4.5, 1.999, 0.0030890637186820327],
    [4.5, 2.0, 0.0030934764653474138],
    [4.5, 3.0, 0.008772387751404086],
    [4.5, 7.5, 0.03655840664640336],
    [4.5, 10.0, 0.04484867991180603],
    [4.5, 35.0, 0.050483549586246804],
    [4.5, 50.0, 0.046104263847688814],
    [4.5, 200.0, 0.026830372484425852],
    [4.5, 700.0, 0.014864572453505455],
    [4.5, 5000.0, 0.005630622194480867],
    [4.5, 100000.0, 0.0012614401100608948],
    [8.5, 1e-08, 2.3154319981369966e-76],
    [8.5, 0.001, 7.31472076790557e-34],
    [8.5, 0.5, 3.904686195843076e-11],
    [8.5, 1.0, 8.744844212945997e-09],
    [8.5, 1.999, 1.2555374573832427e-06],
    [8.5, 2.0, 1.2597571923537327e-06],
    [8.5, 3.0, 1.6558048681191714e-05],
    [8.5, 7.5, 0.0014104974514517557],
    [8.5, 10.0, 0.003571834021112497],
    [8.5, 35.0, 0.023875208622969015],
    [8.5, 50.0, 0.027310676299557104],
    [8.5, 200.0, 0.02355252871541697],
    [8.5, 700.0, 0.014322215338287638],
    [8.5, 5000.0, 0.005601416048919166],
    [8.5, 100000.0, 0.0012611121766260489],
    [12.0, 1e-08, 5.096864448022591e-109],
    [12.0, 0.001, 5.091770279993887e-49],
    [12.0, 0.5, 7.583741041226475e-17],
    [12.0, 1.0, 1.9114137095704504e-13],
    [12.0, 1.999, 3.035182728181741e-10],
    [12.0, 2.0, 3.050634543301475e-10],
    [12.0, 3.0, 1.6017083099451624e-08],
    [12.0, 7.5, 2.535240732257405e-05],
    [12.0, 10.0, 0.0001413195292093306],
    [12.0, 35.0, 0.008571959192239114],
    [12.0, 50.0, 0.013300837295159327],
    [12.0, 200.0, 0.019677763495275644],
    [12.0, 700.0, 0.01360622053951343],
    [12.0, 5000.0, 0.005561365764383905],
    [12.0, 100000.0, 0.0012606598315160163],
    [17.5, 1e-08, 3.599861981299108e-161],
    [17.5, 0.001, 1.1372385317417972e-73],
    [17.5, 0.5, 1.1819001112458356e-26],
    [17.5, 1.0, 1.3423265655539525e-21],
    [17.5, 1.999, 9.457462585018055e-17],
    [17.5, 2.0, 9.531577188842545e-17],
    [17.5, 3.0, 4.525645548419151e-14],
    [17.5, 7.5, 8.642430101332654e-09],
    [17.5, 10.0, 1.91200936931669e-07],
    [17.5, 35.0, 0.0008758752437643597],
    [17.5, 50.0, 0.0026472678843981103],
    [17.5, 200.0, 0.013108093722980937],
    [17.5, 700.0, 0.012116403857097292],
    [17.5, 5000.0, 0.0054718519316945],
    [17.5, 100000.0, 0.0012596375308467779],
    [29.5, 1e-08, 2.7310217103797434e-277],
    [29.5, 0.001, 8.627617168904332e-130],
    [29.5, 0.5, 2.186165128855497e-50],
    [29.5, 1.0, 1.0129546510546038e-41],
    [29.5, 1.999, 2.859996200205224e-33],
    [29.5, 2.0, 2.8996983942970122e-33],
    [29.5, 3.0, 1.7398805800266161e-28],
    [29.5, 7.5, 1.5567670266896764e-18],
    [29.5, 10.0, 8.807990124850515e-16],
    [29.5, 35.0, 4.355121195105028e-07],
    [29.5, 50.0, 1.0958838438236497e-05],
    [29.5, 200.0, 0.0032000581725675848],
    [29.5, 700.0, 0.008097017517025821],
    [29.5, 5000.0, 0.005171752990496151],
    [29.5, 100000.0, 0.0012560903391994642],
];

pub const GAUSS_Q: &[[f64; 2]] = &[
    [0.0, 0.5],
    [0.1, 0.460172162722971],
    [0.2, 0.42074029056089696],
    [0.3, 0.3820885778110474],
    [0.4, 0.3445782583896758],
    [0.5, 0.3085375387259869],
    [0.6, 0.2742531177500736],
    [0.7, 0.241963652223073],
    [0.8, 0.2118553985833967],
    [0.9, 0.1840601253467595],
    [1.0, 0.15865525393145705],
    [1.1, 0.13566606094638267],
    [1.2, 0.11506967022170826],
    [1.3, 0.09680048458561033],
    [1.4, 0.08075665923377105],
    [1.5, 0.06680720126885807],
    [1.6, 0.054799291699557995],
    [1.7, 0.04456546275854304],
    [1.8, 0.0359303191129258],
    [1.9, 0.0287165598160018],
    [2.0, 0.02275013194817921],
    [2.1, 0.017864420562816556],
    [2.2, 0.013903447513498611],
    [2.3, 0.010724110021675805],
    [2.4, 0.00819753592459613],
    [2.5, 0.006209665325776135],
    [2.6, 0.00466118802371875],
    [2.7, 0.0034669738030406686],
    [2.8, 0.002555130330427933],
    [2.9, 0.001865813300384038],
    [3.0, 0.0013498980316300946],
    [3.1, 0.0009676032132183569],
    [3.2, 0.0006871379379158485],
    [3.3, 0.0004834241423837772],
    [3.4, 0.00033692926567688097],
    [3.5, 0.00023262907903552504],
    [3.6, 0.00015910859015753388],
    [3.7, 0.00010779973347738834],
    [3.8, 7.234804392511998e-05],
    [3.9, 4.8096344017602716e-05],
    [4.0, 3.1671241833119924e-05],
    [4.1, 2.0657506912546737e-05],
    [4.2, 1.3345749015906338e-05],
    [4.3, 8.539905470991804e-06],
    [4.4, 5.41254390770386e-06],
    [4.5, 3.3976731247300603e-06],
    [4.6, 2.11245470250285e-06],
    [4.7, 1.300807453917282e-06],
    [4.8, 7.933281519755946e-07],
    [4.9, 4.791832765903198e-07],
    [5.0, 2.866515718791939e-07],
    [5.1, 1.6982674071475982e-07],
    [5.2, 9.96442631693348e-08],
    [5.3, 5.790134039964589e-08],
    [5.4, 3.3320448485428574e-08],
    [5.5, 1.8989562465887718e-08],
    [5.6, 1.0717590258310907e-08],
    [5.7, 5.9903714010635345e-09],
    [5.8, 3.3157459783261613e-09],
    [5.9, 1.8175078630994324e-09],
    [6.0, 9.86587645037698e-10],
];

pub const HYP2F1: &[[f64; 5]] = &[
    [2.0, 10.0, 3.0, -0.1570529969171704, 0.39491767264429717],
    [
        13.0,
        16.0,
        14.0,
        -25.437629556242907,
        5.0112629028988275e-21,
    ],
    [6.0, 8.0, 7.0, -0.0025191701532945865, 0.9828957672249085],
    [3.0, 10.0, 4.0, -0.23453188251593704, 0.2174813036760838],
    [8.0, 15.0, 9.0, -0.4963988204854137, 0.005065672688190533],
    [14.0, 21.0, 15.0, -0.013580164684825476, 0.7677161223396785],
    [1.0, 4.0, 2.0, -0.0012975026270843106, 0.9974105955540478],
    [8.0, 14.0, 9.0, -31.71692971369962, 7.587379906712186e-16],
    [13.0, 18.0, 14.0, -679.8752099804271, 6.336411383266398e-41],
    [12.0, 17.0, 13.0, -77.7961871451566, 1.1179652583951453e-26],
    [7.0, 13.0, 8.0, -0.041675851785713314, 0.6289020445264734],
    [7.0, 15.0, 8.0, -38.08500747686021, 2.5071158602495376e-15],
    [8.0, 14.0, 9.0, -13.109025987565172, 8.908344762778262e-13],
    [
        16.0,
        23.0,
        17.0,
        -112.19355750175617,
        2.1266635702207257e-38,
    ],
    [13.0, 14.0, 14.0, -0.09971431531121062, 0.2906441462170823],
    [
        16.0,
        24.0,
        17.0,
        -0.31138479103029026,
        0.0022394122658875824,
    ],
    [10.0, 17.0, 11.0, -337.6616952020132, 6.481238016561886e-30],
    [2.0, 8.0, 3.0, -1.2476212076666064, 0.02956493690438014],
    [14.0, 21.0, 15.0, -1.1586237587435955, 3.49597391526146e-07],
    [5.0, 7.0, 6.0, -0.04824506740204841, 0.7598032811609975],
    [10.0, 16.0, 11.0, -0.9584092841284884, 6.734346487652113e-05],
    [13.0, 19.0, 14.0, -8.033659050648136, 1.9891380635895978e-16],
    [6.0, 10.0, 7.0, -0.01819001346663203, 0.8568964021910198],
    [2.0, 6.0, 3.0, -48.61290902291876, 4.2315202820958356e-05],
    [4.0, 6.0, 5.0, -0.001050598518633441, 0.9949725426812477],
    [15.0, 20.0, 16.0, -0.25780414328975, 0.013668083133755714],
    [3.0, 6.0, 4.0, -84.71870184966907, 1.6445812987365884e-07],
    [8.0, 15.0, 9.0, -0.3635975107799197, 0.016824501843703862],
    [12.0, 15.0, 13.0, -0.09559475241829009, 0.2826730319952647],
    [15.0, 19.0, 16.0, -0.002175671799677891, 0.962028125275471],
    [1.0, 7.0, 2.0, -0.30908739430792287, 0.43208083883967846],
    [15.0, 18.0, 16.0, -20.61332221859413, 1.3673302318718519e-22],
    [2.0, 3.0, 3.0, -2.6570665788890673, 0.07477118542905119],
    [
        14.0,
        17.0,
        15.0,
        -2.5499159625825403,
        2.1919337726487903e-09,
    ],
    [12.0, 18.0, 13.0, -673.7887261457596, 1.845715732406427e-38],
    [7.0, 15.0, 8.0, -0.47658901300455087, 0.006776614536679446],
    [7.0, 15.0, 8.0, -0.011931734545955443, 0.85591281982751],
    [2.0, 3.0, 3.0, -0.25460919853601205, 0.6353061584420158],
    [4.0, 8.0, 5.0, -0.5274708330902247, 0.07094293193255215],
    [15.0, 23.0, 16.0, -1.0672690684796415, 1.967634244687786e-07],
    [0.7, 1.3, 2.1, -0.4, 0.860707160563122],
    [2.5, 1.5, 3.2, -3.0, 0.17890877850317424],
    [1.0, 1.0, 2.0, -0.9, 0.7131709846359942],
    [0.5, 2.0, 1.5, -20.0, 0.17483448850109526],
];
