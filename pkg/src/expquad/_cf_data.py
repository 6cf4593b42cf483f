"""Precomputed pole/residue pairs of the (N-1,N) best rational
approximation to exp on (-inf, 0], keyed by degree N.

Generated offline by scripts/gen_cf_table.py; do not edit by hand."""

# fmt: off
CF_POLES_RESIDUES = {
    2: (
        [(0.585051560655133-1.1858472517236853j),
         (0.585051560655133+1.1858472517236853j)],
        [(0.16915263361154478+0.8098011115445259j),
         (0.16915263361154478-0.8098011115445259j)],
    ),
    3: (
        [(0.19816972961609708-2.4106677661885128j),
         (1.3688034212107425+0j),
         (0.19816972961609708+2.4106677661885128j)],
        [(0.6911221950418106-0.04314372835720555j),
         (-1.4837496454512145+0j),
         (0.6911221950418106+0.04314372835720555j)],
    ),
    4: (
        [(-0.36783831439982795-3.6581332720632966j),
         (1.548400570539427-1.1918258539276294j),
         (1.548400570539427+1.1918258539276294j),
         (-0.36783831439982795+3.6581332720632966j)],
        [(0.07339241923415878-0.45000491585380653j),
         (-0.06168352255495235+1.9050594559799263j),
         (-0.06168352255495212-1.9050594559799259j),
         (0.07339241923415878+0.45000491585380653j)],
    ),
    5: (
        [(-1.0395069762767162-4.921388603221985j),
         (1.4405947739927958-2.3969827787124487j),
         (2.155414289432574+0j),
         (1.4405947739927958+2.3969827787124487j),
         (-1.0395069762767162+4.921388603221985j)],
        [(-0.2387881203872602-0.10373892026619687j),
         (1.8723828149828914+0.37820678994185364j),
         (-3.2718146221931805+0j),
         (1.8723828149828905-0.37820678994185564j),
         (-0.2387881203872602+0.10373892026619687j)],
    ),
    6: (
        [(-1.781988275920295-6.196512467347452j),
         (1.158552571719849-3.614772600820016j),
         (2.400602938933599-1.193129308402217j),
         (2.400602938933599+1.193129308402217j),
         (1.158552571719849+3.614772600820016j),
         (-1.781988275920295+6.196512467347452j)],
        [(-0.08358161715630646+0.10642926074799516j),
         (0.6630068705280995-1.451412919903618j),
         (-0.5790130040305846+4.28688856458401j),
         (-0.579013004030581-4.28688856458401j),
         (0.6630068705280981+1.4514129199036179j),
         (-0.0835816171563065-0.1064292607479952j)],
    ),
    7: (
        [(-2.5757261310962227-7.480977367601256j),
         (0.7576085974118694-4.843618480313303j),
         (2.4231963194323054-2.393029298772155j),
         (2.941096892564323+0j),
         (2.4231963194323054+2.393029298772155j),
         (0.7576085974118694+4.843618480313303j),
         (-2.5757261310962227+7.480977367601256j)],
        [(0.03968046105266459+0.05247761582107073j),
         (-0.9026051607302152-0.7400361476427899j),
         (4.456669211372449+1.5604498800401563j),
         (-7.187625680885184+0j),
         (4.4566692113724535-1.5604498800401514j),
         (-0.9026051607302169+0.7400361476427918j),
         (0.039680461052664595-0.05247761582107068j)],
    ),
    8: (
        [(-3.408539501432711-8.773034564401513j),
         (0.2694909874092307-6.082032592683704j),
         (2.2922491478721696-3.6007714960651542j),
         (3.2209452451088914-1.1936196054153523j),
         (3.2209452451088914+1.1936196054153523j),
         (2.2922491478721696+3.6007714960651542j),
         (0.2694909874092307+6.082032592683704j),
         (-3.408539501432711+8.773034564401513j)],
        [(0.028129757162842044-0.011577384568991822j),
         (-0.6325880537669288+0.44392310271080554j),
         (2.4362407330791656-3.7167556410248124j),
         (-1.831771710753964+9.525608130428243j),
         (-1.8317717107539881-9.525608130428244j),
         (2.436240733079161+3.7167556410248053j),
         (-0.6325880537669294-0.4439231027108047j),
         (0.028129757162842047+0.011577384568991862j)],
    ),
    9: (
        [(-4.272277342901626-10.071413404264124j),
         (-0.285716362421949-7.328757958321691j),
         (2.0477955218968105-4.816232265052808j),
         (3.3196836139549615-2.391341566529355j),
         (3.726440440834017+0j),
         (3.3196836139549615+2.391341566529355j),
         (2.0477955218968105+4.816232265052808j),
         (-0.285716362421949+7.328757958321691j),
         (-4.272277342901626+10.071413404264124j)],
        [(-0.001822294428802702-0.013400277218348734j),
         (0.15496216594571235+0.44758717951380983j),
         (-2.4638881201382947-2.789685941462389j),
         (10.197195734168996+4.561767927324846j),
         (-15.772898199258002+0j),
         (10.197195734168975-4.561767927324815j),
         (-2.4638881201382987+2.789685941462388j),
         (0.15496216594571324-0.44758717951380933j),
         (-0.0018222944288027012+0.013400277218348732j)],
    ),
    10: (
        [(-5.161191249551113-11.375156261079443j),
         (-0.8944046820736192-8.582756905935291j),
         (1.715406033768596-6.038934930587288j),
         (3.2837529004814345-3.5943867753518486j),
         (4.027732484435258-1.193856067448119j),
         (4.027732484435258+1.193856067448119j),
         (3.2837529004814345+3.5943867753518486j),
         (1.715406033768596+6.038934930587288j),
         (-0.8944046820736192+8.582756905935291j),
         (-5.161191249551113+11.375156261079443j)],
        [(-0.005784903991463444-0.0006858506737544475j),
         (0.27258698550841687-0.014211729107543961j),
         (-2.565584996467467+1.216385739735863j),
         (7.117165209165346-8.819533333167847j),
         (-4.8183820593635245+21.054597615314627j),
         (-4.818382059363528-21.054597615314613j),
         (7.117165209165354+8.819533333167819j),
         (-2.5655849964674715-1.2163857397358515j),
         (0.2725869855084171+0.01421172910754348j),
         (-0.005784903991463444+0.0006858506737544567j)],
    ),
    11: (
        [(-6.0710611346181205-12.683520486814977j),
         (-1.5468804504566835-9.843173315295687j),
         (1.3125379842806257-7.268318848984946j),
         (3.142990180678286-4.8030732504554505j),
         (4.176509210814607-2.3904652791314787j),
         (4.511622180603739+0j),
         (4.176509210814607+2.3904652791314787j),
         (3.142990180678286+4.8030732504554505j),
         (1.3125379842806257+7.268318848984946j),
         (-1.5468804504566835+9.843173315295687j),
         (-6.0710611346181205+12.683520486814977j)],
        [(-0.0008816721935878713+0.0022803678372675523j),
         (0.03404727193863249-0.14565217482335427j),
         (0.3085127857957755+1.9833750524394607j),
         (-5.9835661942331475-8.464456106971523j),
         (22.940705061432105+11.849853431190821j),
         (-34.59763457196656+0j),
         (22.94070506143213-11.849853431190834j),
         (-5.983566194233181+8.464456106971527j),
         (0.3085127857957704-1.9833750524394753j),
         (0.034047271938632655+0.14565217482335419j),
         (-0.0008816721935878713-0.002280367837267556j)],
    ),
    12: (
        [(-6.998687691083076-13.995916862736882j),
         (-2.235967788588517-11.109296240944966j),
         (0.8517077572876015-8.503832769864196j),
         (2.917869331634669-6.017345875866457j),
         (4.206125052904109-3.590920734019408j),
         (4.827494323434518-1.1939879843909256j),
         (4.827494323434518+1.1939879843909256j),
         (4.206125052904109+3.590920734019408j),
         (2.917869331634669+6.017345875866457j),
         (0.8517077572876015+8.503832769864196j),
         (-2.235967788588517+11.109296240944966j),
         (-6.998687691083076+13.995916862736882j)],
        [(0.000818433839660792+0.000581353568902501j),
         (-0.0685715301751367-0.03841910161659376j),
         (1.3194124478726788+0.18352374510364797j),
         (-8.238262557497817+2.796193336565012j),
         (18.785993476689942-20.23730210054783j),
         (-11.799390266130178+46.41167549336519j),
         (-11.799390266130203-46.411675493365195j),
         (18.785993476689995+20.237302100547872j),
         (-8.23826255749784-2.7961933365649925j),
         (1.319412447872677-0.18352374510364755j),
         (-0.0685715301751367+0.03841910161659364j),
         (0.000818433839660791-0.0005813535689025023j)],
    ),
    13: (
        [(-7.941595896763718-15.311863446755238j),
         (-2.956205482670052-12.380526299388569j),
         (0.3422161526460942-9.744963752936574j),
         (2.6231171325608025-7.236989990414189j),
         (4.139535485517479-4.795665539528395j),
         (5.011686764142875-2.389951215546174j),
         (5.296703180912385+0j),
         (5.011686764142875+2.389951215546174j),
         (4.139535485517479+4.795665539528395j),
         (2.6231171325608025+7.236989990414189j),
         (0.3422161526460942+9.744963752936574j),
         (-2.956205482670052+12.380526299388569j),
         (-7.941595896763718+15.311863446755238j)],
        [(0.0003077029545415159-0.000262689469775005j),
         (-0.02832759021889988+0.028042662271796213j),
         (0.35143732245100884-0.760983067496972j),
         (0.2155615300635611+6.788427990526918j),
         (-13.765895522627405-23.10870868051107j),
         (51.162978774408636+29.08305604789803j),
         (-75.8721244353107+0j),
         (51.16297877440848-29.083056047898115j),
         (-13.765895522627421+23.108708680510983j),
         (0.21556153006353682-6.788427990526907j),
         (0.351437322451011+0.7609830674969704j),
         (-0.028327590218899863-0.028042662271796318j),
         (0.0003077029545415155+0.00026268946977500495j)],
    ),
    14: (
        [(-8.897652046978129-16.631076006677343j),
         (-3.7031628618932695-13.656451274280343j),
         (-0.20865277957938178-10.991324657707255j),
         (2.2698859705653587-8.461786436995268j),
         (3.9934702129509976-6.0048651498998025j),
         (5.089445073090542-3.5888436127688887j),
         (5.623242509138156-1.194075483584683j),
         (5.623242509138156+1.194075483584683j),
         (5.089445073090542+3.5888436127688887j),
         (3.9934702129509976+6.0048651498998025j),
         (2.2698859705653587+8.461786436995268j),
         (-0.20865277957938178+10.991324657707255j),
         (-3.7031628618932695+13.656451274280343j),
         (-8.897652046978129+16.631076006677343j)],
        [(-7.156460863164035e-05-0.00014362123819630892j),
         (0.009441395595376224+0.01718600792689796j),
         (-0.37642071302719166-0.33519684858691656j),
         (4.807677509163895+1.320903044884346j),
         (-23.50051685843814+5.809688553713138j),
         (46.937390330401975-45.64928000435211j),
         (-27.87750009900375+102.1582572273926j),
         (-27.877500099003715-102.15825722739257j),
         (46.93739033040202+45.64928000435217j),
         (-23.500516858438147-5.809688553713107j),
         (4.807677509163882-1.3209030448843555j),
         (-0.376420713027191+0.3351968485869153j),
         (0.009441395595376113-0.01718600792689788j),
         (-7.156460863164039e-05+0.0001436212381963091j)],
    ),
    15: (
        [(-9.866045651744603-17.952331559548387j),
         (-4.474273808362471-14.935926549111654j),
         (-0.7961793895687221-12.241930721251382j),
         (1.8657373111196933-9.690998743660549j),
         (3.7794350784413653-7.2181641123766225j),
         (5.078015289920834-4.7909227870562106j),
         (5.833149718867553-2.3895547403345057j),
         (6.081137928486506+0j),
         (5.833149718867553+2.3895547403345057j),
         (5.078015289920834+4.7909227870562106j),
         (3.7794350784413653+7.2181641123766225j),
         (1.8657373111196933+9.690998743660549j),
         (-0.7961793895687221+12.241930721251382j),
         (-4.474273808362471+14.935926549111654j),
         (-9.866045651744603+17.952331559548387j)],
        [(-6.120933005825269e-05+1.3628580147027063e-05j),
         (0.009148447188095574-0.0020999121620263175j),
         (-0.24848359496502628+0.15174373209904324j),
         (1.8739333743499462-2.91782242890024j),
         (-1.205453326364743+20.29861942835276j),
         (-30.75783909702162-59.3565058827285j),
         (113.46035938914282+69.09161125544621j),
         (-166.2632079660201+0j),
         (113.46035938914284-69.09161125544647j),
         (-30.757839097021566+59.356505882728506j),
         (-1.205453326364728-20.29861942835271j),
         (1.8739333743499482+2.9178224289002435j),
         (-0.24848359496502623-0.15174373209904432j),
         (0.009148447188095574+0.0020999121620263175j),
         (-6.120933005825275e-05-1.3628580147027246e-05j)],
    ),
    16: (
        [(-10.83399677826791-19.279443496656025j),
         (-5.254866344449664-16.222143547512392j),
         (-1.403804915681174-13.499549091821725j),
         (1.429406147365271-10.927034409283882j),
         (3.5189767884460625-8.43763015573429j),
         (5.002883331240963-5.997978579248048j),
         (5.957732512767848-3.588145129771058j),
         (6.425689322846401-1.1943564787095033j),
         (6.425689322846401+1.1943564787095033j),
         (5.957732512767848+3.588145129771058j),
         (5.002883331240963+5.997978579248048j),
         (3.5189767884460625+8.43763015573429j),
         (1.429406147365271+10.927034409283882j),
         (-1.403804915681174+13.499549091821725j),
         (-5.254866344449664+16.222143547512392j),
         (-10.83399677826791+19.279443496656025j)],
        [(-4.6500256749901643e-07+2.4463450207194962e-05j),
         (0.0002051677822111265-0.004434376247573529j),
         (0.04172630775638161+0.1589634403996222j),
         (-1.4970981782924409-1.784110246783386j),
         (15.217398215307151+5.788494487206291j),
         (-63.12342556701401+11.362835548134624j),
         (114.44545100951565-103.01330934555821j),
         (-65.08425649005102+226.79740265211626j),
         (-65.08425649005135-226.7974026521162j),
         (114.44545100951564+103.01330934555823j),
         (-63.123425567014095-11.362835548134633j),
         (15.217398215307165-5.788494487206313j),
         (-1.4970981782924417+1.78411024678337j),
         (0.041726307756379206-0.15896344039961996j),
         (0.00020516778221109936+0.004434376247573508j),
         (-4.650025674989684e-07-2.4463450207195e-05j)],
    ),
}
# fmt: on
