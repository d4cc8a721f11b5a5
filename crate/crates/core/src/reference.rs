//! Chi-square upper-tail reference values Q(df/2, x/2), computed offline at
//! 60 significant digits and rounded to 17.

#![allow(clippy::excessive_precision)]

/// `(x, df, survival)` triples on the grid x in [0.1, 150], df in 1..=20.
pub const CHISQ_REFERENCE: &[(f64, u32, f64)] = &[
    (0.1, 1, 7.5182963404584928e-1),
    (0.25, 1, 6.1707507745197379e-1),
    (0.5, 1, 4.7950012218695346e-1),
    (1.0, 1, 3.173105078629141e-1),
    (1.5, 1, 2.2067136191984679e-1),
    (2.0, 1, 1.5729920705028513e-1),
    (3.0, 1, 8.3264516663550402e-2),
    (5.0, 1, 2.5347318677468264e-2),
    (7.5, 1, 6.1698993205441622e-3),
    (10.0, 1, 1.5654022580025497e-3),
    (15.0, 1, 1.0751117672950056e-4),
    (20.0, 1, 7.7442164310440836e-6),
    (25.0, 1, 5.7330314375838782e-7),
    (30.0, 1, 4.3204630578274973e-8),
    (40.0, 1, 2.539628589470865e-10),
    (50.0, 1, 1.5374597944280349e-12),
    (60.0, 1, 9.4857375710738484e-15),
    (75.0, 1, 4.7071405901403864e-18),
    (90.0, 1, 2.3816001643962988e-21),
    (100.0, 1, 1.5239706048321052e-23),
    (110.0, 1, 9.7990738419793655e-26),
    (125.0, 1, 5.0894689738143661e-29),
    (140.0, 1, 2.6620348904588314e-32),
    (150.0, 1, 1.7336432457178264e-34),
    (0.1, 2, 9.5122942450071401e-1),
    (0.25, 2, 8.824969025845954e-1),
    (0.5, 2, 7.7880078307140487e-1),
    (1.0, 2, 6.0653065971263342e-1),
    (1.5, 2, 4.7236655274101471e-1),
    (2.0, 2, 3.6787944117144232e-1),
    (3.0, 2, 2.2313016014842983e-1),
    (5.0, 2, 8.2084998623898795e-2),
    (7.5, 2, 2.3517745856009108e-2),
    (10.0, 2, 6.7379469990854671e-3),
    (15.0, 2, 5.5308437014783358e-4),
    (20.0, 2, 4.5399929762484852e-5),
    (25.0, 2, 3.726653172078671e-6),
    (30.0, 2, 3.0590232050182579e-7),
    (40.0, 2, 2.0611536224385578e-9),
    (50.0, 2, 1.3887943864964021e-11),
    (60.0, 2, 9.3576229688401746e-14),
    (75.0, 2, 5.1755550058018685e-17),
    (90.0, 2, 2.8625185805493936e-20),
    (100.0, 2, 1.9287498479639178e-22),
    (110.0, 2, 1.2995814250075031e-24),
    (125.0, 2, 7.1877817390609886e-28),
    (140.0, 2, 3.9754497359086468e-31),
    (150.0, 2, 2.6786369618080779e-33),
    (0.1, 3, 9.9183742373187648e-1),
    (0.25, 3, 9.6914040421627327e-1),
    (0.5, 3, 9.1889141165467586e-1),
    (1.0, 3, 8.012519569012008e-1),
    (1.5, 3, 6.8227033033621257e-1),
    (2.0, 3, 5.7240670447087983e-1),
    (3.0, 3, 3.9162517627108896e-1),
    (5.0, 3, 1.7179714429673314e-1),
    (7.5, 3, 5.7558451972636407e-2),
    (10.0, 3, 1.8566135463043233e-2),
    (15.0, 3, 1.8166489665723232e-3),
    (20.0, 3, 1.6974243555282643e-4),
    (25.0, 3, 1.5440498291101365e-5),
    (30.0, 3, 1.3800570312932547e-6),
    (40.0, 3, 1.0655090334255861e-8),
    (50.0, 3, 7.9891792449514711e-11),
    (60.0, 3, 5.8782307279069123e-13),
    (75.0, 3, 3.6233193554446625e-16),
    (90.0, 3, 2.1905701192853111e-19),
    (100.0, 3, 1.5541594313896049e-21),
    (110.0, 3, 1.0973257017510114e-23),
    (125.0, 3, 6.4628420608887509e-27),
    (140.0, 3, 3.7797221629021321e-30),
    (150.0, 3, 2.6349139284880436e-32),
    (0.1, 4, 9.9879089572574971e-1),
    (0.25, 4, 9.9280901540766983e-1),
    (0.5, 4, 9.7350097883925609e-1),
    (1.0, 4, 9.0979598956895014e-1),
    (1.5, 4, 8.2664146729677574e-1),
    (2.0, 4, 7.3575888234288464e-1),
    (3.0, 4, 5.5782540037107457e-1),
    (5.0, 4, 2.8729749518364578e-1),
    (7.5, 4, 1.1170929281604326e-1),
    (10.0, 4, 4.0427681994512803e-2),
    (15.0, 4, 4.7012171462565855e-3),
    (20.0, 4, 4.9939922738733337e-4),
    (25.0, 4, 5.0309817823062058e-5),
    (30.0, 4, 4.8944371280292126e-6),
    (40.0, 4, 4.3284226071209714e-8),
    (50.0, 4, 3.6108654048906454e-10),
    (60.0, 4, 2.9008631203404541e-12),
    (75.0, 4, 1.9925886772337194e-15),
    (90.0, 4, 1.3167585470527211e-18),
    (100.0, 4, 9.8366242246159807e-21),
    (110.0, 4, 7.2776559800420172e-23),
    (125.0, 4, 4.5642414043037278e-26),
    (140.0, 4, 2.8225693124951392e-29),
    (150.0, 4, 2.0357640909741392e-31),
    (0.1, 5, 9.9983768338807738e-1),
    (0.25, 5, 9.9847918144663156e-1),
    (0.5, 5, 9.9212329323262959e-1),
    (1.0, 5, 9.6256577324729637e-1),
    (1.5, 5, 9.1306981454439546e-1),
    (2.0, 5, 8.4914503608460964e-1),
    (3.0, 5, 6.9998583587862751e-1),
    (5.0, 5, 4.1588018699550792e-1),
    (7.5, 5, 1.8602983360286702e-1),
    (10.0, 5, 7.5235246146512179e-2),
    (15.0, 5, 1.0362337915786437e-2),
    (20.0, 5, 1.2497305630313754e-3),
    (25.0, 5, 1.3933379118562617e-4),
    (30.0, 5, 1.4748581038443052e-5),
    (40.0, 5, 1.4933679000503952e-7),
    (50.0, 5, 1.3857973367009593e-9),
    (60.0, 5, 1.2154569777183039e-11),
    (75.0, 5, 9.3029518094026129e-15),
    (90.0, 5, 6.7193193648525753e-18),
    (100.0, 5, 5.2851483609432401e-20),
    (110.0, 5, 4.0973302058415518e-22),
    (125.0, 5, 2.7362731585883072e-25),
    (140.0, 5, 1.7892447348278751e-28),
    (150.0, 5, 1.3351378873003131e-30),
    (0.1, 6, 9.999799325063756e-1),
    (0.25, 6, 9.9970352245911198e-1),
    (0.5, 6, 9.9783850331023749e-1),
    (1.0, 6, 9.8561232203302931e-1),
    (1.5, 6, 9.5949456025518612e-1),
    (2.0, 6, 9.196986029286058e-1),
    (3.0, 6, 8.0884683053805813e-1),
    (5.0, 6, 5.4381311588332952e-1),
    (7.5, 6, 2.7706844336610731e-1),
    (10.0, 6, 1.2465201948308114e-1),
    (15.0, 6, 2.0256715056664405e-2),
    (20.0, 6, 2.7693957155115759e-3),
    (25.0, 6, 3.4145459689170823e-4),
    (30.0, 6, 3.9308448184484614e-5),
    (40.0, 6, 4.5551495055892128e-7),
    (50.0, 6, 4.701068998290321e-9),
    (60.0, 6, 4.501016648012124e-11),
    (75.0, 6, 3.8383209811778108e-14),
    (90.0, 6, 3.0299759175115332e-17),
    (100.0, 6, 2.509303552201057e-19),
    (110.0, 6, 2.0383934651242686e-21),
    (125.0, 6, 1.4495060349533866e-24),
    (140.0, 6, 1.0022108784225699e-27),
    (150.0, 6, 7.7372428641826331e-30),
    (0.1, 7, 9.999976885812014e-1),
    (0.25, 7, 9.9994612030814947e-1),
    (0.5, 7, 9.9944648139042497e-1),
    (1.0, 7, 9.9482853651651548e-1),
    (1.5, 7, 9.8230965980685033e-1),
    (2.0, 7, 9.5984036873010156e-1),
    (3.0, 7, 8.8500223164315064e-1),
    (5.0, 7, 6.5996322969428271e-1),
    (7.5, 7, 3.7873690604821294e-1),
    (10.0, 7, 1.8857346751345007e-1),
    (15.0, 7, 3.5999404763428777e-2),
    (20.0, 7, 5.5696830729455713e-3),
    (25.0, 7, 7.5880025565825022e-4),
    (30.0, 7, 9.4959725081341838e-5),
    (40.0, 7, 1.2587903873713088e-6),
    (50.0, 7, 1.4444852779215405e-8),
    (60.0, 7, 1.5095553022989121e-10),
    (75.0, 7, 1.4341224991727481e-13),
    (90.0, 7, 1.2372404171748537e-16),
    (100.0, 7, 1.0787979671702883e-18),
    (110.0, 7, 9.1824478190503466e-21),
    (125.0, 7, 6.9527391608073799e-24),
    (140.0, 7, 5.082977510439578e-27),
    (150.0, 7, 4.0598800327763293e-29),
    (0.1, 8, 9.999997497860527e-1),
    (0.25, 8, 9.999907935862554e-1),
    (0.5, 8, 9.9986663034948594e-1),
    (1.0, 8, 9.9824837744370918e-1),
    (1.5, 8, 9.9270783349478872e-1),
    (2.0, 8, 9.8101184312384619e-1),
    (3.0, 8, 9.3435754562154991e-1),
    (5.0, 8, 7.5757613313306596e-1),
    (7.5, 8, 4.8376738155368736e-1),
    (10.0, 8, 2.6502591529736171e-1),
    (15.0, 8, 5.9145459832683954e-2),
    (20.0, 8, 1.0336050675925718e-2),
    (25.0, 8, 1.5545578430110673e-3),
    (30.0, 8, 2.1137850346676162e-4),
    (40.0, 8, 3.2037197804769984e-6),
    (50.0, 8, 4.0867589479967458e-8),
    (60.0, 8, 4.661032000779291e-10),
    (75.0, 8, 4.9326597399358296e-13),
    (90.0, 8, 4.6504476859605449e-16),
    (100.0, 8, 4.2691592051449344e-18),
    (110.0, 8, 3.8074703396061489e-20),
    (125.0, 8, 3.0696664803918998e-23),
    (140.0, 8, 2.3728531868700334e-26),
    (150.0, 8, 1.9607890424131311e-28),
    (0.1, 9, 9.999999743696746e-1),
    (0.25, 9, 9.9999851098177511e-1),
    (0.5, 9, 9.9996956625883892e-1),
    (1.0, 9, 9.994375026978325e-1),
    (1.5, 9, 9.971467695059478e-1),
    (2.0, 9, 9.9146760662881353e-1),
    (3.0, 9, 9.6429497268508913e-1),
    (5.0, 9, 8.3430826019340755e-1),
    (7.5, 9, 5.8520876938251213e-1),
    (10.0, 9, 3.5048521232336134e-1),
    (15.0, 9, 9.093597657980522e-2),
    (20.0, 9, 1.7912404529843274e-2),
    (25.0, 9, 2.9711804859176218e-3),
    (30.0, 9, 4.3872177097947949e-4),
    (40.0, 9, 7.598525229464276e-6),
    (50.0, 9, 1.0772382022574716e-7),
    (60.0, 9, 1.3406780483959613e-9),
    (75.0, 9, 1.5802975867873341e-12),
    (90.0, 9, 1.6280704719656213e-15),
    (100.0, 9, 1.5735176303753944e-17),
    (110.0, 9, 1.470393946520905e-19),
    (125.0, 9, 1.2622259353488862e-22),
    (140.0, 9, 1.0316403824957539e-25),
    (150.0, 9, 8.8196299548054143e-28),
    (0.1, 10, 9.9999999750204866e-1),
    (0.25, 10, 9.9999977080897863e-1),
    (0.5, 10, 9.9999338828943897e-1),
    (1.0, 10, 9.9982788437004416e-1),
    (1.5, 10, 9.9893532222721421e-1),
    (2.0, 10, 9.9634015317265629e-1),
    (3.0, 10, 9.8142406377785933e-1),
    (5.0, 10, 8.9117801891415124e-1),
    (7.5, 10, 6.7754763610454366e-1),
    (10.0, 10, 4.4049328506521241e-1),
    (15.0, 10, 1.3206185628772061e-1),
    (20.0, 10, 2.9252688076961073e-2),
    (25.0, 10, 5.3455054871340643e-3),
    (30.0, 10, 8.5664121077530039e-4),
    (40.0, 10, 1.6944743930067384e-5),
    (50.0, 10, 2.6690834249044956e-7),
    (60.0, 10, 3.624300952061488e-9),
    (75.0, 10, 4.7577918881980034e-12),
    (90.0, 10, 5.35592612458162e-15),
    (100.0, 10, 5.4497019829205293e-17),
    (110.0, 10, 5.3357396494644827e-19),
    (125.0, 10, 4.8768352056900667e-22),
    (140.0, 10, 4.2143914919856121e-25),
    (150.0, 10, 3.7274850550625096e-27),
    (0.1, 11, 9.9999999976732431e-1),
    (0.25, 11, 9.9999996627826472e-1),
    (0.5, 11, 9.9999862652930636e-1),
    (1.0, 11, 9.9994961005131217e-1),
    (1.5, 11, 9.9961962112246404e-1),
    (2.0, 11, 9.984958817174162e-1),
    (3.0, 11, 9.9072588636573529e-1),
    (5.0, 11, 9.3116661047069913e-1),
    (7.5, 11, 7.5726865549442813e-1),
    (10.0, 11, 5.3038715100104053e-1),
    (15.0, 11, 1.8249692960709929e-1),
    (20.0, 11, 4.5340674434060391e-2),
    (25.0, 11, 9.1166811255269873e-3),
    (30.0, 11, 1.584595257306605e-3),
    (40.0, 11, 3.5775124527655241e-5),
    (50.0, 11, 6.2594030603981248e-7),
    (60.0, 11, 9.2721615028364283e-9),
    (75.0, 11, 1.3554342060704495e-11),
    (90.0, 11, 1.6671534774446981e-14),
    (100.0, 11, 1.7858382448801679e-16),
    (110.0, 11, 1.8319576337225812e-18),
    (125.0, 11, 1.7827483487304613e-21),
    (140.0, 11, 1.6288694275250213e-24),
    (150.0, 11, 1.4904699581360177e-26),
    (0.1, 12, 9.9999999997920862e-1),
    (0.25, 12, 9.9999999523954672e-1),
    (0.5, 12, 9.9999972618643662e-1),
    (1.0, 12, 9.9998583506267766e-1),
    (1.5, 12, 9.9986944553707803e-1),
    (2.0, 12, 9.9940581518241831e-1),
    (3.0, 12, 9.9554401922475215e-1),
    (5.0, 12, 9.5797896180469388e-1),
    (7.5, 12, 8.2288282701768588e-1),
    (10.0, 12, 6.1596065483306312e-1),
    (15.0, 12, 2.4143645097027559e-1),
    (20.0, 12, 6.7085962879031782e-2),
    (25.0, 12, 1.4822874597441557e-2),
    (30.0, 12, 2.7924293327009167e-3),
    (40.0, 12, 7.1908840528428926e-5),
    (50.0, 12, 1.3971121075428601e-6),
    (60.0, 12, 2.2573487463962842e-8),
    (75.0, 12, 3.6741736244731157e-11),
    (90.0, 12, 4.937385832845171e-14),
    (100.0, 12, 5.5677562606980888e-16),
    (110.0, 12, 5.9840658420007029e-18),
    (125.0, 12, 6.2000192176326026e-21),
    (140.0, 12, 5.9893877918166135e-24),
    (150.0, 12, 5.6698577317380457e-26),
    (0.1, 13, 9.9999999999821203e-1),
    (0.25, 13, 9.9999999935318493e-1),
    (0.5, 13, 9.9999994745069125e-1),
    (1.0, 13, 9.9999616526526486e-1),
    (1.5, 13, 9.999568281610799e-1),
    (2.0, 13, 9.9977374991534395e-1),
    (3.0, 13, 9.9793431736954788e-1),
    (5.0, 13, 9.7519313332401349e-1),
    (7.5, 13, 8.7458221420709813e-1),
    (10.0, 13, 6.9393436798074889e-1),
    (15.0, 13, 3.0735277464431848e-1),
    (20.0, 13, 9.5210256078091513e-2),
    (25.0, 13, 2.3083728033730091e-2),
    (30.0, 13, 4.7097047654714927e-3),
    (40.0, 13, 1.3823548561198602e-4),
    (50.0, 13, 2.9814697870128367e-6),
    (60.0, 13, 5.2534798527057157e-8),
    (75.0, 13, 9.5195554382866954e-11),
    (90.0, 13, 1.3975442452202174e-13),
    (100.0, 13, 1.6590260807085881e-15),
    (110.0, 13, 1.8681140024427489e-17),
    (125.0, 13, 2.060690465777106e-20),
    (140.0, 13, 2.1046938018303424e-23),
    (150.0, 13, 2.0612383484335521e-25),
    (0.1, 14, 9.9999999999985162e-1),
    (0.25, 14, 9.9999999991518355e-1),
    (0.5, 14, 9.9999999026547819e-1),
    (1.0, 14, 9.9999899762039712e-1),
    (1.5, 14, 9.9998621095081101e-1),
    (2.0, 14, 9.9991675885071198e-1),
    (3.0, 14, 9.9907400808647536e-1),
    (5.0, 14, 9.8581268800908665e-1),
    (7.5, 14, 9.1371732133839977e-1),
    (10.0, 14, 7.6218346297293871e-1),
    (15.0, 14, 3.7815469432346932e-1),
    (20.0, 14, 1.3014142088248296e-1),
    (25.0, 14, 3.4567393577248833e-2),
    (30.0, 14, 7.6318996375149575e-3),
    (40.0, 14, 2.5512249585630073e-4),
    (50.0, 14, 6.106294461927904e-6),
    (60.0, 14, 1.1731942002346961e-7),
    (75.0, 14, 2.3664138847306337e-10),
    (90.0, 14, 3.7950834985747738e-13),
    (100.0, 14, 4.7424306780748388e-15),
    (110.0, 14, 5.594690804833137e-17),
    (125.0, 14, 6.570351606204506e-20),
    (140.0, 14, 7.0948788622360556e-23),
    (150.0, 14, 7.188372305963548e-25),
    (0.1, 15, 9.9999999999998809e-1),
    (0.25, 15, 9.9999999998924109e-1),
    (0.5, 15, 9.999999982553599e-1),
    (1.0, 15, 9.9999974643556892e-1),
    (1.5, 15, 9.9999573666553557e-1),
    (2.0, 15, 9.9997034502271745e-1),
    (3.0, 15, 9.9959780144735078e-1),
    (5.0, 15, 9.9212641134451901e-1),
    (7.5, 15, 9.4226311346440775e-1),
    (10.0, 15, 8.1973991950360147e-1),
    (15.0, 15, 4.5141721122572524e-1),
    (20.0, 15, 1.7193268937660093e-1),
    (25.0, 15, 4.9943433626428367e-2),
    (30.0, 15, 1.1921495938159695e-2),
    (40.0, 15, 4.5349813510223459e-4),
    (50.0, 15, 1.2041198559986007e-5),
    (60.0, 15, 2.5220850786961437e-7),
    (75.0, 15, 5.6620254854918883e-10),
    (90.0, 15, 9.9186673815907777e-13),
    (100.0, 15, 1.3047043436251444e-14),
    (110.0, 15, 1.6125114486885363e-16),
    (125.0, 15, 2.0160840762931528e-19),
    (140.0, 15, 2.3016459976514776e-22),
    (150.0, 15, 2.4124984724817594e-24),
    (0.1, 16, 9.9999999999999907e-1),
    (0.25, 16, 9.9999999999867707e-1),
    (0.5, 16, 9.9999999969687253e-1),
    (1.0, 16, 9.9999993780309136e-1),
    (1.5, 16, 9.9999872153085383e-1),
    (2.0, 16, 9.9998975080332536e-1),
    (3.0, 16, 9.9983043427113033e-1),
    (5.0, 16, 9.9575330451065549e-1),
    (7.5, 16, 9.6237865758163936e-1),
    (10.0, 16, 8.666283259299927e-1),
    (15.0, 16, 5.2463852648760545e-1),
    (20.0, 16, 2.2022064660169894e-1),
    (25.0, 16, 6.982546318404754e-2),
    (30.0, 16, 1.8002193147830759e-2),
    (40.0, 16, 7.7859008250736304e-4),
    (50.0, 16, 2.2924802870445918e-5),
    (60.0, 16, 5.2337341670707004e-7),
    (75.0, 16, 1.3075323825534145e-9),
    (90.0, 16, 2.5018015096869281e-12),
    (100.0, 16, 3.4639966763825052e-14),
    (110.0, 16, 4.4851209681235804e-16),
    (125.0, 16, 5.9698473788715629e-19),
    (140.0, 16, 7.2054279692779998e-22),
    (150.0, 16, 7.8131799442996514e-24),
    (0.1, 17, 9.9999999999999993e-1),
    (0.25, 17, 9.9999999999984203e-1),
    (0.5, 17, 9.9999999994884885e-1),
    (1.0, 17, 9.9999998518025585e-1),
    (1.5, 17, 9.9999962751598114e-1),
    (2.0, 17, 9.9999655770370059e-1),
    (3.0, 17, 9.9993049826291136e-1),
    (5.0, 17, 9.9777083735135418e-1),
    (7.5, 17, 9.7610356309306255e-1),
    (10.0, 17, 9.0361028718550319e-1),
    (15.0, 17, 5.9548164780713199e-1),
    (20.0, 17, 2.7422926710794682e-1),
    (25.0, 17, 9.4709609614258827e-2),
    (30.0, 17, 2.63450782835361e-2),
    (40.0, 17, 1.2941985337428974e-3),
    (50.0, 17, 4.2240294469896573e-5),
    (60.0, 17, 1.0509033452398432e-6),
    (75.0, 17, 2.9212375193807982e-9),
    (90.0, 17, 6.1045406199814139e-12),
    (100.0, 17, 8.8967159139870485e-14),
    (110.0, 17, 1.2067645137279787e-15),
    (125.0, 17, 1.7099542657255171e-18),
    (140.0, 17, 2.1819294427356949e-21),
    (150.0, 17, 2.4476244848865801e-23),
    (0.1, 18, 9.9999999999999999e-1),
    (0.25, 18, 9.9999999999998165e-1),
    (0.5, 18, 9.999999999916036e-1),
    (1.0, 18, 9.9999999656450975e-1),
    (1.5, 18, 9.9999989439773284e-1),
    (2.0, 18, 9.9999887479740203e-1),
    (3.0, 18, 9.9997226418075314e-1),
    (5.0, 18, 9.9885974716739576e-1),
    (7.5, 18, 9.8518865894565791e-1),
    (10.0, 18, 9.3190636527815144e-1),
    (15.0, 18, 6.6196711914148308e-1),
    (20.0, 18, 3.3281967875071891e-1),
    (25.0, 18, 1.2491619694467052e-1),
    (30.0, 18, 3.7446493479672887e-2),
    (40.0, 18, 2.0872590491350188e-3),
    (50.0, 18, 7.5482641647064711e-5),
    (60.0, 18, 2.0460759042705717e-6),
    (75.0, 18, 6.3273339173050604e-9),
    (90.0, 18, 1.4439700533727589e-11),
    (100.0, 18, 2.2149956729976389e-13),
    (110.0, 18, 3.1473977695650414e-15),
    (125.0, 18, 4.7476192833958378e-18),
    (140.0, 18, 6.404490369600395e-21),
    (150.0, 18, 7.4322642885268057e-23),
    (0.1, 19, 1.0),
    (0.25, 19, 9.9999999999999792e-1),
    (0.5, 19, 9.9999999999865735e-1),
    (1.0, 19, 9.9999999922406097e-1),
    (1.5, 19, 9.9999997082631457e-1),
    (2.0, 19, 9.9999964154852213e-1),
    (3.0, 19, 9.9998920946565735e-1),
    (5.0, 19, 9.9943096264748218e-1),
    (7.5, 19, 9.9103317322335144e-1),
    (10.0, 19, 9.5294579758662185e-1),
    (15.0, 19, 7.2259732714366736e-1),
    (20.0, 19, 3.9457818208600081e-1),
    (25.0, 19, 1.6054222136106833e-1),
    (30.0, 19, 5.1798458893023874e-2),
    (40.0, 19, 3.2723171187797512e-3),
    (50.0, 19, 1.3106116479316295e-4),
    (60.0, 19, 3.8698263006641803e-6),
    (75.0, 19, 1.3311097684814369e-8),
    (90.0, 19, 3.3171637641393782e-11),
    (100.0, 19, 5.355560750435119e-13),
    (110.0, 19, 7.9718510181105523e-15),
    (125.0, 19, 1.2800732634079942e-17),
    (140.0, 19, 1.8255286973081377e-20),
    (150.0, 19, 2.1915635993460735e-22),
    (0.1, 20, 1.0),
    (0.25, 20, 9.9999999999999977e-1),
    (0.5, 20, 9.9999999999979058e-1),
    (1.0, 20, 9.99999999829033e-1),
    (1.5, 20, 9.9999999213663943e-1),
    (2.0, 20, 9.9999988857452166e-1),
    (3.0, 20, 9.9999590249902361e-1),
    (5.0, 20, 9.9972264790537916e-1),
    (7.5, 20, 9.9469282618066564e-1),
    (10.0, 20, 9.6817194269379519e-1),
    (15.0, 20, 7.7640761301971443e-1),
    (20.0, 20, 4.5792971447185221e-1),
    (25.0, 20, 2.0143110494553577e-1),
    (30.0, 20, 6.9853660699409768e-2),
    (40.0, 20, 4.9954123083075872e-3),
    (50.0, 20, 2.2147663824878358e-4),
    (60.0, 20, 7.1217508628155771e-6),
    (75.0, 20, 2.7243173645436918e-8),
    (90.0, 20, 7.4129195653930891e-11),
    (100.0, 20, 1.2596084591660908e-12),
    (110.0, 20, 1.9640587991942551e-14),
    (125.0, 20, 3.3571470293872793e-17),
    (140.0, 20, 5.0612971490387245e-20),
    (150.0, 20, 6.285681673933381e-22),
];
