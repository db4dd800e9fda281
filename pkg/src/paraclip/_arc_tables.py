"""Constant tables for the conic-arc moment operator.

Generated by tools/gen_arc_tables.py -- do not edit by hand.
All entries are exact integer ratios; callers materialize them
in whatever scalar precision they run at.
"""

# (numerator, denominator) of the 12x10 channel matrix
K_RATIONAL = (
    ((-3, 8), (31, 48), (-7, 8), (-1, 16), (0, 1), (1, 24), (0, 1), (0, 1), (0, 1), (0, 1)),
    ((0, 1), (-1, 6), (5, 8), (-3, 16), (0, 1), (1, 24), (0, 1), (0, 1), (0, 1), (0, 1)),
    ((0, 1), (2, 3), (-3, 1), (11, 6), (-2, 1), (0, 1), (0, 1), (0, 1), (0, 1), (0, 1)),
    ((-1, 32), (93, 2240), (0, 1), (-163, 3360), (0, 1), (5, 168), (0, 1), (-1, 140), (0, 1), (0, 1)),
    ((0, 1), (1, 70), (-1, 16), (29, 1120), (0, 1), (-19, 1680), (0, 1), (1, 420), (0, 1), (0, 1)),
    ((0, 1), (-1, 210), (0, 1), (1, 21), (-1, 8), (13, 560), (0, 1), (-1, 280), (0, 1), (0, 1)),
    ((0, 1), (1, 35), (0, 1), (-16, 105), (0, 1), (58, 105), (-1, 1), (1, 14), (0, 1), (0, 1)),
    ((-1, 128), (193, 16128), (0, 1), (-149, 8064), (0, 1), (19, 1120), (0, 1), (-41, 5040), (0, 1), (1, 630)),
    ((0, 1), (4, 945), (-1, 48), (65, 6048), (0, 1), (-1, 144), (0, 1), (11, 3780), (0, 1), (-1, 1890)),
    ((0, 1), (-1, 1890), (0, 1), (13, 1890), (-1, 48), (11, 2016), (0, 1), (-5, 3024), (0, 1), (1, 3780)),
    ((0, 1), (1, 315), (0, 1), (-1, 45), (0, 1), (4, 35), (-1, 4), (17, 504), (0, 1), (-1, 252)),
    ((0, 1), (-1, 63), (0, 1), (29, 315), (0, 1), (-26, 105), (0, 1), (194, 315), (-1, 1), (1, 18)),
)

# pole order of each channel at w = 1
POLE_POWER = (3, 3, 3, 4, 4, 4, 4, 5, 5, 5, 5, 5)

# Taylor coefficients about w = 1 (order 40) per channel
SERIES_RATIONAL = (
    (
        (11, 210),
        (-1, 315),
        (-1, 198),
        (4, 429),
        (-1, 99),
        (976, 109395),
        (-1624, 230945),
        (128, 24871),
        (-2416, 676039),
        (1152, 482885),
        (-7744, 5014575),
        (141824, 145422675),
        (-181376, 300540195),
        (3641344, 9917826435),
        (-899072, 4083810885),
        (10944512, 83945001525),
        (-208896, 2735050175),
        (229376, 5175556485),
        (-24592384, 964378691705),
        (34471936, 2367111334185),
        (-15368192, 1860438674025),
        (63438848, 13621832590275),
        (-2104229888, 805867616040669),
        (683671552, 469351468683027),
        (-154664960, 191217265019011),
        (8124366848, 18165640176806045),
        (-9103736832, 36957681739019195),
        (8707375104, 64411959602290597),
        (-67750592512, 916312070471295267),
        (480231030784, 11912056916126838471),
        (-4160749568, 189835834018481085),
        (833223655424, 70116423635414278395),
        (-6398695964672, 995653215622882753209),
        (36507222016, 10529144537225907719),
        (-290984034304, 155904514672823768735),
        (22170621181952, 22113824581224213512675),
        (-72226317533184, 134384010916670220577025),
        (89438398971904, 311002996692865367621115),
        (-96705483636736, 629591432329459158842745),
        (292195215081472, 3567684783200268566775555),
        (-1573572938039296, 36091694899816670384822475),
    ),
    (
        (1, 42),
        (1, 63),
        (-13, 1386),
        (4, 1001),
        (-1, 1287),
        (-16, 21879),
        (56, 46189),
        (-384, 323323),
        (656, 676039),
        (-128, 177905),
        (704, 1404081),
        (-512, 1530765),
        (21632, 100180065),
        (-1347584, 9917826435),
        (342016, 4083810885),
        (-851968, 16789000305),
        (69632, 2297442147),
        (-8421376, 470975640135),
        (30195712, 2893136075115),
        (-14286848, 2367111334185),
        (16744448, 4837140552465),
        (-17301504, 8778514335955),
        (898367488, 805867616040669),
        (-2059403264, 3285460280781189),
        (469237760, 1338520855133077),
        (-708837376, 3633128035361209),
        (799014912, 7391536347803839),
        (-3841982464, 64411959602290597),
        (1581252608, 48226951077436593),
        (-213943058432, 11912056916126838471),
        (4160749568, 424299741297447197),
        (-8589934592, 1609229394911147373),
        (2884875845632, 995653215622882753209),
        (-12668006039552, 8075853860052271220473),
        (3221225472, 3802549138361555335),
        (-8589934592, 18820276239339756181),
        (6594922283008, 26876802183334044115405),
        (-286594577727488, 2177020976850057573347805),
        (310663574454272, 4407140026306214111899215),
        (-44805098831872, 1189228261066756188925185),
        (145101175128064, 7218338979963334076964495),
    ),
    (
        (-2, 35),
        (-4, 315),
        (106, 3465),
        (-1024, 45045),
        (32, 3003),
        (-1504, 765765),
        (-5264, 2078505),
        (59392, 14549535),
        (-150272, 37182145),
        (124416, 37182145),
        (-1146112, 456326325),
        (23412736, 13233463425),
        (-37593088, 31556720475),
        (4272128, 5509903575),
        (-34113536, 69424785045),
        (3914334208, 12843585233325),
        (-1823801344, 9821565178425),
        (4986896384, 44742685812825),
        (-163119104, 2469750308025),
        (243269632, 6285088714905),
        (-137456779264, 6118982798868225),
        (352339361792, 27257287013140275),
        (-49573003264, 6715563467005575),
        (4470591193088, 1067774591253886425),
        (-1108848148480, 469820820151710027),
        (4542448009216, 3433305993416342505),
        (-5536254787584, 7502409393020896585),
        (3826278989824, 9339734142332136565),
        (-32166083821568, 142028370923050766385),
        (46052384178176, 369273764399931992601),
        (-273051270774784, 3990539066902490887785),
        (1144729043468288, 30594132846252430139685),
        (-12083336436514816, 592413663295615238159355),
        (28202997238464512, 2543893965916465434448995),
        (-311999309283328, 51916203386050314988755),
        (50514862714912768, 15546018680600622099410525),
        (-58177702846267392, 33192850696417544482525175),
        (133482567037878272, 141506363495253742267607325),
        (-457695663799402496, 903463705392773892939339075),
        (834076326691340288, 3071776598335431235993752855),
        (-58446189841874944, 402355561660919177253020925),
    ),
    (
        (-2, 315),
        (-4, 3465),
        (6, 5005),
        (-16, 15015),
        (4, 4641),
        (-96, 146965),
        (16, 33915),
        (-256, 780045),
        (288, 1300075),
        (-1024, 7020405),
        (5632, 59879925),
        (-4096, 68751025),
        (13312, 358229025),
        (-8192, 358229025),
        (4096, 294543865),
        (-131072, 15664378275),
        (139264, 27923456925),
        (-393216, 133412071975),
        (1245184, 720425188665),
        (-524288, 520922828727),
        (393216, 675270333535),
        (-11534336, 34438787010285),
        (12058624, 62939852122245),
        (-25165824, 230779457781565),
        (5242880, 84867284474511),
        (-872415232, 25035848919980745),
        (905969664, 46278387397540165),
        (-268435456, 24500322739874205),
        (1946157056, 318504195618364665),
        (-1610612736, 474217357920676279),
        (8321499136, 4421756445476576115),
        (-17179869184, 16523405664675626535),
        (17716740096, 30928425987726172745),
        (-146028888064, 463926389815892591175),
        (4294967296, 24893611160852773185),
        (-309237645312, 3277658802845615136025),
        (317827579904, 6174194489081275023675),
        (-1305670057984, 46587103872158711542275),
        (446676598784, 29332620956544373934025),
        (-549755813888, 66572296257896361711135),
        (2817498546176, 630312166697103850243725),
    ),
    (
        (1, 630),
        (1, 1155),
        (-19, 30030),
        (16, 45045),
        (-12, 85085),
        (16, 1616615),
        (8, 146965),
        (-256, 3380195),
        (96, 1300075),
        (-128, 2064825),
        (704, 14753025),
        (-364544, 10518906825),
        (492544, 20419054425),
        (-12288, 756261275),
        (2048, 192093825),
        (-131072, 19145351225),
        (10166272, 2354878200675),
        (-8224768, 3068477655425),
        (5914624, 3602125943325),
        (-56098816, 56433306445425),
        (47054848, 79006629023595),
        (-109576192, 309949083092565),
        (18087936, 86916938645005),
        (-813694976, 6692604275665385),
        (61865984, 876961939569947),
        (-10523508736, 258703772173134365),
        (18874368, 809319970386235),
        (-60934848512, 4581560352356476335),
        (1946157056, 257836729786295205),
        (-30333206528, 7113260368810144185),
        (1177492127744, 490814965447899948765),
        (-5205500362752, 3871984727422321818035),
        (5734318211072, 7639321218968364668015),
        (-36507222016, 87406421269660922975),
        (394063249408, 1701063429324939500975),
        (-17214228922368, 134384010916670220577025),
        (317827579904, 4499836661533810610475),
        (-12403865550848, 319357972920740153036175),
        (61864708931584, 2903929474697893019468475),
        (-267731081363456, 22967442208974244790341575),
        (160597417132032, 25235831562947009707906175),
    ),
    (
        (-1, 630),
        (-1, 693),
        (1, 1638),
        (-4, 45045),
        (-97, 765765),
        (2416, 14549535),
        (-216, 1616615),
        (640, 7436429),
        (-112, 2414425),
        (9088, 456326325),
        (-704, 145422675),
        (-76288, 31556720475),
        (351104, 69424785045),
        (-167936, 31556720475),
        (493568, 107929287675),
        (-3866624, 1091285019825),
        (69632, 27067565525),
        (-36143104, 20251952525805),
        (35176448, 29397995601975),
        (-3041263616, 3893898144734325),
        (591167488, 1185099435353925),
        (-6303514624, 20146690401016725),
        (223084544, 1154350909463661),
        (-20971520, 178029867431493),
        (164102144, 2311990567957133),
        (-63522734080, 1500481878604179317),
        (78976647168, 3156186020512239253),
        (-7063207936, 481452104823900903),
        (13744734208, 1609737421098221415),
        (-19699672809472, 3990539066902490887785),
        (23670504292352, 8343854412614299129005),
        (-56495999811584, 34847862546800896362315),
        (468976874291200, 508778793183293086889799),
        (-13909251588096, 26665555198285801199675),
        (123481383501824, 420162667043260056740825),
        (-26190710571008, 158817467446973897045575),
        (13746042830848, 149111025811647778996425),
        (-152110561755136, 2962176083254996370292915),
        (10679814138626048, 374606902236028199511433275),
        (-2810076842688512, 178091805981062586652976475),
        (4165671600521216, 478406934523101822334987275),
    ),
    (
        (1, 63),
        (2, 99),
        (-1, 429),
        (-16, 6435),
        (268, 109395),
        (-976, 692835),
        (8, 13923),
        (-40448, 334639305),
        (-11712, 185910725),
        (27904, 264188925),
        (-1206656, 13233463425),
        (342016, 5469831549),
        (-12826112, 347123925225),
        (6596608, 347123925225),
        (-1119232, 138103067025),
        (375652352, 166966608033225),
        (38158336, 80536834463085),
        (-85262336, 58301075453075),
        (1456242688, 911337863661225),
        (-59139162112, 42832879592077575),
        (106600988672, 99943385714847675),
        (-71357169664, 92674775844676935),
        (566580477952, 1067774591253886425),
        (-1383398899712, 3915173501264250225),
        (55274635264, 241259340077905149),
        (-310034563072, 2132263722226991661),
        (8297511911424, 91529394594854938337),
        (-45866559733760, 823764551353694445033),
        (298248568832, 8834300583730430445),
        (-834687098421248, 41235570357992405840445),
        (1102992866541568, 91782398538757290419055),
        (-9217583932768256, 1303310059250353523950581),
        (18413598539776, 4458830541352707741585),
        (-30455273793519616, 12719469829582327172244975),
        (192994039765663744, 139914168125405598894694725),
        (-970231978295033856, 1228135475767449145853431475),
        (48399101695361024, 107544836256392844123381567),
        (-2996247079216480256, 11745028170106060608211407975),
        (736985343969984512, 5119627663892385393322921425),
        (-3275279112888909824, 40491600614421593565372196725),
        (43772865908282753024, 966860414671188782939009282775),
    ),
    (
        (1, 693),
        (2, 9009),
        (-1, 4095),
        (16, 69615),
        (-4, 20349),
        (16, 101745),
        (-8, 66861),
        (1024, 11700675),
        (-128, 2064825),
        (512, 11975985),
        (-2816, 97698825),
        (4096, 214937415),
        (-13312, 1074687075),
        (4096, 516408075),
        (-2048, 408635955),
        (262144, 83770370775),
        (-278528, 144085037733),
        (65536, 55417322205),
        (-622592, 868204714545),
        (524288, 1215486600363),
        (-131072, 508947591285),
        (5767168, 37763911273347),
        (-6029312, 67000487743035),
        (67108864, 1273009267117665),
        (-41943040, 1365591759271677),
        (436207616, 24500322739874205),
        (-16777216, 1633354849324947),
        (268435456, 45500599374052095),
        (-1946157056, 576750840714336015),
        (268435456, 139634414067681351),
        (-4160749568, 3813093614925144585),
        (34359738368, 55671166777907110941),
        (-11811160064, 33945833401162872525),
        (73014444032, 373404167412791597775),
        (-2147483648, 19600617425654841345),
        (34359738368, 561290408098297729425),
        (-317827579904, 9317420774431742308455),
        (652835028992, 34433946340291221574725),
        (-223338299392, 21246477529115860120575),
        (2199023255552, 378187300018262310146235),
        (-11269994184704, 3511739214455292879929325),
    ),
    (
        (-4, 10395),
        (-8, 45045),
        (4, 27027),
        (-32, 328185),
        (40, 793611),
        (-64, 3968055),
        (-32, 7020405),
        (512, 35102025),
        (-1856, 105306075),
        (2048, 122155047),
        (-11264, 795547575),
        (679936, 61257163275),
        (-26624, 3224061225),
        (704512, 119290265325),
        (-8192, 2000997999),
        (15990784, 5780155583475),
        (-19775488, 10806377829975),
        (1835008, 1543768261425),
        (-2490368, 3276772632315),
        (5242880, 10939379403267),
        (-92536832, 309949083092565),
        (3021996032, 16427301403905945),
        (-699400192, 6231045360102255),
        (8036286464, 118389861841942845),
        (-262144000, 6437789722280763),
        (333262618624, 13744681057069429005),
        (-5972688896, 416505486577861485),
        (536870912, 63700839123672933),
        (-11676942336, 2371086789603381395),
        (842887331840, 294488979268739969259),
        (-4676682514432, 2825502368659532137485),
        (34359738368, 36066038278046134995),
        (-2279553892352, 4175337508343033320575),
        (292057776128, 937320665138231969925),
        (-8589934592, 48491390507852936259),
        (79920751443968, 796471089091484478054075),
        (-87084756893696, 1537374427781237480895075),
        (75728863363072, 2375942297480094288656025),
        (-175990579920896, 9843189518131819195860675),
        (106652627894272, 10664881860514997146123827),
        (-5634997092352, 1010226349363851376418025),
    ),
    (
        (1, 6930),
        (1, 9009),
        (-17, 270270),
        (16, 765765),
        (148, 43648605),
        (-16, 1247103),
        (248, 18253053),
        (-256, 24017175),
        (32, 4578525),
        (-3968, 1017958725),
        (33088, 18934032285),
        (-4096, 9055406745),
        (-13312, 61257163275),
        (1110016, 2266515041175),
        (-837632, 1550773449225),
        (6160384, 12716342283645),
        (-42754048, 109360543639347),
        (73367552, 248546690089425),
        (-108019712, 507899758008825),
        (525860864, 3555298306061775),
        (-655360, 6551769236103),
        (651689984, 9856380842343567),
        (-1549533184, 36140063088593079),
        (18782093312, 686661198683268501),
        (-24034410496, 1397000369734925571),
        (910746976256, 85217022553830459831),
        (-316669952, 48226951077436593),
        (713769877504, 178680853741902577065),
        (-873824518144, 362776278809317353435),
        (303063629824, 210349270906242835185),
        (-5962354130944, 6969572509360179272463),
        (33483565039616, 66362451284777359159539),
        (-305005491912704, 1031308364560729230182025),
        (102913858863104, 597073263693053764842225),
        (-297426485248, 2976512136792531546825),
        (376479653298176, 6531062930550172720043415),
        (-5403068858368, 163227408381711633774045),
        (21270018079588352, 1123820706708084598534299825),
        (-103405632618496, 9593994846786709849130025),
        (37497194797858816, 6132307069796123359021200525),
        (-55113089061748736, 15943998381469920733455121365),
    ),
    (
        (-1, 693),
        (-2, 1287),
        (1, 2145),
        (8, 109395),
        (-2, 9405),
        (288, 1616615),
        (-34864, 334639305),
        (4352, 98423325),
        (-4064, 456326325),
        (-91904, 13233463425),
        (15488, 1372031325),
        (-508928, 49589132175),
        (3328, 443325575),
        (-20406272, 4281195077775),
        (26169344, 9821565178425),
        (-512622592, 402684172315425),
        (413474816, 911337863661225),
        (-65536, 2417341813425),
        (-324370432, 2039660932956075),
        (644612096, 3028587445904475),
        (-4083089408, 20146690401016725),
        (10530848768, 62810270073758025),
        (-60136357888, 469820820151710027),
        (63610814464, 686661198683268501),
        (-51232374784, 794372759261036109),
        (109051904, 2502406068713397),
        (-272214523904, 9468558061536717759),
        (34332659941376, 1846368821999659963005),
        (-47198444191744, 3990539066902490887785),
        (75628468502528, 10198044282084143379895),
        (-209260738772992, 45570281791970402935335),
        (7154023945732096, 2543893965916465434448995),
        (-1032950908977152, 605689039503920341535475),
        (6236090650329088, 6083224701104591256291075),
        (-182621603551510528, 298735656267757900342726575),
        (51212863619989504, 141506363495253742267607325),
        (-192297286548586496, 903463705392773892939339075),
        (1910896439651729408, 15358882991677156179968764275),
        (-46214500939988992, 639035303814401046225386175),
        (1925375152363667456, 46040972127199465854238537275),
        (-2344809632582598656, 97435545664538404482225741675),
    ),
    (
        (1, 99),
        (2, 143),
        (-1, 2145),
        (-16, 7293),
        (1108, 692835),
        (-3376, 4849845),
        (17608, 111546435),
        (31232, 557732175),
        (-64, 648945),
        (11331328, 145568097675),
        (-18882688, 410237366175),
        (96913408, 4512611027925),
        (-126464, 18269680275),
        (-2048, 32848044075),
        (426363904, 166966608033225),
        (-120848384, 42519446766225),
        (39628128256, 17315419409563275),
        (-27200651264, 17315419409563275),
        (41196290048, 42832879592077575),
        (-158707744768, 299830157144543025),
        (1304563941376, 5097112671457231425),
        (-187646345216, 1889139661449183675),
        (31249924096, 1677931500541821525),
        (3840321519616, 223164889572062262825),
        (-323483598848, 11205726370001424261),
        (4203187535872, 145370214944769607947),
        (-6684349038592, 274588183784564815011),
        (333754056835072, 17848231945996712975715),
        (-111748824694784, 8247114071598481168089),
        (1276569574178816, 135488302604832190618605),
        (-811463706935296, 127775496004936619995155),
        (34855996069249024, 8345757396954018179683545),
        (-64676270759215104, 24025665233655506880907175),
        (757816914608128, 444171962302874917126015),
        (-100696309266120704, 94471959674419165065648575),
        (1108843767076487168, 1686084297240057301934372025),
        (-556283124795834368, 1386059225043572369913147525),
        (48430414515209764864, 199665478891803030339593935575),
        (-2814274073708724224, 19365548119940762139960615825),
        (46910873605783945216, 543031191801626576719169597175),
        (-13635627949041385472, 267429476398413918685257886725),
    ),
)

# window on which the series evaluation replaces the direct form
SERIES_WINDOW = (0.35, 1.7)
