//! gfPd pmf reference values (α, β, δ, μ, x, pmf) from the Prabhakar
//! series summed in 60+ digit arithmetic (mpmath).

pub const GFPD_PMF: &[(f64, f64, f64, f64, usize, f64)] = &[
    (0.3, 0.3, 0.5, 0.5, 0, 0.673170396405413),
    (0.3, 0.3, 0.5, 0.5, 1, 0.21062308453458456),
    (0.3, 0.3, 0.5, 0.5, 3, 0.02674472428029267),
    (0.3, 0.3, 0.5, 0.5, 10, 6.515640282009702e-06),
    (0.3, 0.3, 0.5, 0.5, 25, 5.019751086047176e-15),
    (0.3, 0.3, 0.5, 2.0, 0, 0.3719841009814776),
    (0.3, 0.3, 0.5, 2.0, 1, 0.19164360056120402),
    (0.3, 0.3, 0.5, 2.0, 3, 0.0937084050209264),
    (0.3, 0.3, 0.5, 2.0, 10, 0.006572448328614589),
    (0.3, 0.3, 0.5, 2.0, 25, 4.470902336978943e-06),
    (0.3, 0.3, 0.5, 5.0, 0, 0.22822665116243804),
    (0.3, 0.3, 0.5, 5.0, 1, 0.12303612084775171),
    (0.3, 0.3, 0.5, 5.0, 3, 0.07967949348767912),
    (0.3, 0.3, 0.5, 5.0, 10, 0.028356385891562627),
    (0.3, 0.3, 0.5, 5.0, 25, 0.0019351287873500668),
    (0.3, 0.3, 1.0, 0.5, 0, 0.4300574876189337),
    (0.3, 0.3, 1.0, 0.5, 1, 0.30619597975180357),
    (0.3, 0.3, 1.0, 0.5, 3, 0.06734723469481184),
    (0.3, 0.3, 1.0, 0.5, 10, 3.122227594924147e-05),
    (0.3, 0.3, 1.0, 0.5, 25, 3.926355005580873e-14),
    (0.3, 0.3, 1.0, 2.0, 0, 0.09591687917396301),
    (0.3, 0.3, 1.0, 2.0, 1, 0.13847121785444172),
    (0.3, 0.3, 1.0, 2.0, 3, 0.1369683913866885),
    (0.3, 0.3, 1.0, 2.0, 10, 0.02113391555980699),
    (0.3, 0.3, 1.0, 2.0, 25, 2.5431588152241795e-05),
    (0.3, 0.3, 1.0, 5.0, 0, 0.021763965945019316),
    (0.3, 0.3, 1.0, 5.0, 1, 0.03829066385275001),
    (0.3, 0.3, 1.0, 5.0, 3, 0.05835909773850581),
    (0.3, 0.3, 1.0, 5.0, 10, 0.05398313896388318),
    (0.3, 0.3, 1.0, 5.0, 25, 0.007124138334784759),
    (0.3, 0.6, 1.0, 0.5, 0, 0.5674306527444336),
    (0.3, 0.6, 1.0, 0.5, 1, 0.26258414474764014),
    (0.3, 0.6, 1.0, 0.5, 3, 0.040683964801332226),
    (0.3, 0.6, 1.0, 0.5, 10, 1.2481389870949946e-05),
    (0.3, 0.6, 1.0, 0.5, 25, 1.1584791580207603e-14),
    (0.3, 0.6, 1.0, 2.0, 0, 0.22502465785643375),
    (0.3, 0.6, 1.0, 2.0, 1, 0.19055942152706848),
    (0.3, 0.6, 1.0, 2.0, 3, 0.11981504279029674),
    (0.3, 0.6, 1.0, 2.0, 10, 0.010928810908240681),
    (0.3, 0.6, 1.0, 2.0, 25, 9.142247512567489e-06),
    (0.3, 0.6, 1.0, 5.0, 0, 0.09739247367650543),
    (0.3, 0.6, 1.0, 5.0, 1, 0.0935802828130422),
    (0.3, 0.6, 1.0, 5.0, 3, 0.08276592802317334),
    (0.3, 0.6, 1.0, 5.0, 10, 0.03975857401763429),
    (0.3, 0.6, 1.0, 5.0, 25, 0.0033793422005312986),
    (0.3, 0.6, 2.0, 0.5, 0, 0.3048465079967934),
    (0.3, 0.6, 2.0, 0.5, 1, 0.30969951809452584),
    (0.3, 0.6, 2.0, 0.5, 3, 0.10502222691737115),
    (0.3, 0.6, 2.0, 0.5, 10, 9.885543433513507e-05),
    (0.3, 0.6, 2.0, 0.5, 25, 2.3302344513312724e-13),
    (0.3, 0.6, 2.0, 2.0, 0, 0.034465236329365254),
    (0.3, 0.6, 2.0, 2.0, 1, 0.07330638640842481),
    (0.3, 0.6, 2.0, 2.0, 3, 0.11715733457959486),
    (0.3, 0.6, 2.0, 2.0, 10, 0.040107318631679996),
    (0.3, 0.6, 2.0, 2.0, 25, 9.810311782107376e-05),
    (0.3, 0.6, 2.0, 5.0, 0, 0.0038121908634632),
    (0.3, 0.6, 2.0, 5.0, 1, 0.010008330259377184),
    (0.3, 0.6, 2.0, 5.0, 3, 0.02517887042312118),
    (0.3, 0.6, 2.0, 5.0, 10, 0.054356986874284335),
    (0.3, 0.6, 2.0, 5.0, 25, 0.015463920302295861),
    (0.3, 0.9, 1.5, 0.5, 0, 0.48521636661939155),
    (0.3, 0.9, 1.5, 0.5, 1, 0.29192466066941036),
    (0.3, 0.9, 1.5, 0.5, 3, 0.05544115652872714),
    (0.3, 0.9, 1.5, 0.5, 10, 2.175979131528702e-05),
    (0.3, 0.9, 1.5, 0.5, 25, 2.4460099679795e-14),
    (0.3, 0.9, 1.5, 2.0, 0, 0.14065586206588296),
    (0.3, 0.9, 1.5, 2.0, 1, 0.16389993227397703),
    (0.3, 0.9, 1.5, 2.0, 3, 0.13294623044200823),
    (0.3, 0.9, 1.5, 2.0, 10, 0.01632989587335491),
    (0.3, 0.9, 1.5, 2.0, 25, 1.7031077214202368e-05),
    (0.3, 0.9, 1.5, 5.0, 0, 0.04337618577687432),
    (0.3, 0.9, 1.5, 5.0, 1, 0.059612657972790195),
    (0.3, 0.9, 1.5, 5.0, 3, 0.07116366815753027),
    (0.3, 0.9, 1.5, 5.0, 10, 0.0486742498171739),
    (0.3, 0.9, 1.5, 5.0, 25, 0.005316114256983234),
    (0.3, 0.9, 3.0, 0.5, 0, 0.22223711836545482),
    (0.3, 0.9, 3.0, 0.5, 1, 0.28868806288384097),
    (0.3, 0.9, 3.0, 0.5, 3, 0.13724486923726925),
    (0.3, 0.9, 3.0, 0.5, 10, 0.00024026791753513905),
    (0.3, 0.9, 3.0, 0.5, 25, 1.024812364758637e-12),
    (0.3, 0.9, 3.0, 2.0, 0, 0.013150973057229983),
    (0.3, 0.9, 3.0, 2.0, 1, 0.03669521451485907),
    (0.3, 0.9, 3.0, 2.0, 3, 0.0855012471214792),
    (0.3, 0.9, 3.0, 2.0, 10, 0.05890981998136518),
    (0.3, 0.9, 3.0, 2.0, 25, 0.00028141131548392503),
    (0.3, 0.9, 3.0, 5.0, 0, 0.0007181872578228873),
    (0.3, 0.9, 3.0, 5.0, 1, 0.0025015986111566147),
    (0.3, 0.9, 3.0, 5.0, 3, 0.00935378515737251),
    (0.3, 0.9, 3.0, 5.0, 10, 0.04259061566089527),
    (0.3, 0.9, 3.0, 5.0, 25, 0.025030882800434615),
    (0.6, 0.3, 0.25, 0.5, 0, 0.7492777386763065),
    (0.6, 0.3, 0.25, 0.5, 1, 0.17681511878823608),
    (0.6, 0.3, 0.25, 0.5, 3, 0.014868059218289608),
    (0.6, 0.3, 0.25, 0.5, 10, 1.3167489318698986e-07),
    (0.6, 0.3, 0.25, 0.5, 25, 9.899947351205225e-22),
    (0.6, 0.3, 0.25, 2.0, 0, 0.4811280770493968),
    (0.6, 0.3, 0.25, 2.0, 1, 0.17600707404058077),
    (0.6, 0.3, 0.25, 2.0, 3, 0.08417955293223381),
    (0.6, 0.3, 0.25, 2.0, 10, 0.00169578371757863),
    (0.6, 0.3, 0.25, 2.0, 25, 1.324704421839473e-09),
    (0.6, 0.3, 0.25, 5.0, 0, 0.3492110698418619),
    (0.6, 0.3, 0.25, 5.0, 1, 0.11369592641489047),
    (0.6, 0.3, 0.25, 5.0, 3, 0.07264062957632754),
    (0.6, 0.3, 0.25, 5.0, 10, 0.02420759179978001),
    (0.6, 0.3, 0.25, 5.0, 25, 0.0001566145915604958),
    (0.6, 0.3, 0.5, 0.5, 0, 0.531098348791772),
    (0.6, 0.3, 0.5, 0.5, 1, 0.3028737448035807),
    (0.6, 0.3, 0.5, 0.5, 3, 0.0363511985431356),
    (0.6, 0.3, 0.5, 0.5, 10, 4.574794870529805e-07),
    (0.6, 0.3, 0.5, 0.5, 25, 4.4120358379160785e-21),
    (0.6, 0.3, 0.5, 2.0, 0, 0.1452574008964723),
    (0.6, 0.3, 0.5, 2.0, 1, 0.18890062898297819),
    (0.6, 0.3, 0.5, 2.0, 3, 0.1566005191089165),
    (0.6, 0.3, 0.5, 2.0, 10, 0.005150420407313472),
    (0.6, 0.3, 0.5, 2.0, 25, 5.468189752135429e-09),
    (0.6, 0.3, 0.5, 5.0, 0, 0.03883139145485095),
    (0.6, 0.3, 0.5, 5.0, 1, 0.059103680216822135),
    (0.6, 0.3, 0.5, 5.0, 3, 0.08220915284841618),
    (0.6, 0.3, 0.5, 5.0, 10, 0.05601428057372874),
    (0.6, 0.3, 0.5, 5.0, 25, 0.000551434523989684),
    (0.6, 0.6, 0.5, 0.5, 0, 0.7077933930743103),
    (0.6, 0.6, 0.5, 0.5, 1, 0.20740715984647812),
    (0.6, 0.6, 0.5, 0.5, 3, 0.016859021593807522),
    (0.6, 0.6, 0.5, 0.5, 10, 1.403071993311216e-07),
    (0.6, 0.6, 0.5, 0.5, 25, 1.0049271433999618e-21),
    (0.6, 0.6, 0.5, 2.0, 0, 0.39098163710602085),
    (0.6, 0.6, 0.5, 2.0, 1, 0.20876159932731697),
    (0.6, 0.6, 0.5, 2.0, 3, 0.09893747125003395),
    (0.6, 0.6, 0.5, 2.0, 10, 0.0018523629680075398),
    (0.6, 0.6, 0.5, 2.0, 25, 1.3649549663940394e-09),
    (0.6, 0.6, 0.5, 5.0, 0, 0.23637043878210398),
    (0.6, 0.6, 0.5, 5.0, 1, 0.12967219450646789),
    (0.6, 0.6, 0.5, 5.0, 3, 0.08825613880196932),
    (0.6, 0.6, 0.5, 5.0, 10, 0.027669600711780026),
    (0.6, 0.6, 0.5, 5.0, 25, 0.00016636246183497936),
    (0.6, 0.6, 1.0, 0.5, 0, 0.47538452718501356),
    (0.6, 0.6, 1.0, 0.5, 1, 0.3232372127526529),
    (0.6, 0.6, 1.0, 0.5, 3, 0.04606080761437427),
    (0.6, 0.6, 1.0, 0.5, 10, 7.327609132096525e-07),
    (0.6, 0.6, 1.0, 0.5, 25, 8.523464205573643e-21),
    (0.6, 0.6, 1.0, 2.0, 0, 0.09649153223106624),
    (0.6, 0.6, 1.0, 2.0, 1, 0.15898975202918034),
    (0.6, 0.6, 1.0, 2.0, 3, 0.16671037569396266),
    (0.6, 0.6, 1.0, 2.0, 10, 0.007466028967238327),
    (0.6, 0.6, 1.0, 2.0, 25, 9.953085665425825e-09),
    (0.6, 0.6, 1.0, 5.0, 0, 0.01747234627826457),
    (0.6, 0.6, 1.0, 5.0, 1, 0.03500522759814921),
    (0.6, 0.6, 1.0, 5.0, 3, 0.06512032200830391),
    (0.6, 0.6, 1.0, 5.0, 10, 0.06672811174394162),
    (0.6, 0.6, 1.0, 5.0, 25, 0.000887883759208859),
    (0.6, 0.9, 0.75, 0.5, 0, 0.674604285613767),
    (0.6, 0.9, 0.75, 0.5, 1, 0.23033998186410892),
    (0.6, 0.9, 0.75, 0.5, 3, 0.018855475813839128),
    (0.6, 0.9, 0.75, 0.5, 10, 1.508903394251074e-07),
    (0.6, 0.9, 0.75, 0.5, 25, 1.035834576544151e-21),
    (0.6, 0.9, 0.75, 2.0, 0, 0.32672601203066204),
    (0.6, 0.9, 0.75, 2.0, 1, 0.22393678874762518),
    (0.6, 0.9, 0.75, 2.0, 3, 0.1117022125689072),
    (0.6, 0.9, 0.75, 2.0, 10, 0.002030443231993845),
    (0.6, 0.9, 0.75, 2.0, 25, 1.4262738109256204e-09),
    (0.6, 0.9, 0.75, 5.0, 0, 0.16667651416071755),
    (0.6, 0.9, 0.75, 5.0, 1, 0.1268314517990823),
    (0.6, 0.9, 0.75, 5.0, 3, 0.09758391129781664),
    (0.6, 0.9, 0.75, 5.0, 10, 0.03117390151746743),
    (0.6, 0.9, 0.75, 5.0, 25, 0.00017848989396342723),
    (0.6, 0.9, 1.5, 0.5, 0, 0.4327623105434708),
    (0.6, 0.9, 1.5, 0.5, 1, 0.3348675206904889),
    (0.6, 0.9, 1.5, 0.5, 3, 0.055096881723151386),
    (0.6, 0.9, 1.5, 0.5, 10, 1.0878250916323425e-06),
    (0.6, 0.9, 1.5, 0.5, 25, 1.517268295063288e-20),
    (0.6, 0.9, 1.5, 2.0, 0, 0.06747784684572478),
    (0.6, 0.9, 1.5, 2.0, 1, 0.13261737035865098),
    (0.6, 0.9, 1.5, 2.0, 3, 0.16923731673110548),
    (0.6, 0.9, 1.5, 2.0, 10, 0.010056833026380657),
    (0.6, 0.9, 1.5, 2.0, 25, 1.670471042627792e-08),
    (0.6, 0.9, 1.5, 5.0, 0, 0.00844505198984551),
    (0.6, 0.9, 1.5, 5.0, 1, 0.020880636619219167),
    (0.6, 0.9, 1.5, 5.0, 3, 0.04973336213272048),
    (0.6, 0.9, 1.5, 5.0, 10, 0.0741831853282342),
    (0.6, 0.9, 1.5, 5.0, 25, 0.0013200131857068233),
    (0.9, 0.3, 0.16666666666666666, 0.5, 0, 0.7865794127415423),
    (0.9, 0.3, 0.16666666666666666, 0.5, 1, 0.1651675659033483),
    (0.9, 0.3, 0.16666666666666666, 0.5, 3, 0.0072705256844709356),
    (0.9, 0.3, 0.16666666666666666, 0.5, 10, 5.011002461258654e-10),
    (0.9, 0.3, 0.16666666666666666, 0.5, 25, 8.50944846686287e-31),
    (0.9, 0.3, 0.16666666666666666, 2.0, 0, 0.5150465270621758),
    (0.9, 0.3, 0.16666666666666666, 2.0, 1, 0.1827579168451002),
    (0.9, 0.3, 0.16666666666666666, 2.0, 3, 0.08655554215770093),
    (0.9, 0.3, 0.16666666666666666, 2.0, 10, 6.967856615667884e-05),
    (0.9, 0.3, 0.16666666666666666, 2.0, 25, 1.0097949097382573e-16),
    (0.9, 0.3, 0.16666666666666666, 5.0, 0, 0.3895966364615612),
    (0.9, 0.3, 0.16666666666666666, 5.0, 1, 0.09505363991280921),
    (0.9, 0.3, 0.16666666666666666, 5.0, 3, 0.08159083670079306),
    (0.9, 0.3, 0.16666666666666666, 5.0, 10, 0.013813307906493308),
    (0.9, 0.3, 0.16666666666666666, 5.0, 25, 1.0683178143282901e-08),
    (0.9, 0.3, 0.3333333333333333, 0.5, 0, 0.5879603120927095),
    (0.9, 0.3, 0.3333333333333333, 0.5, 1, 0.30490771204965156),
    (0.9, 0.3, 0.3333333333333333, 0.5, 3, 0.017310323174286952),
    (0.9, 0.3, 0.3333333333333333, 0.5, 10, 1.5044751750400402e-09),
    (0.9, 0.3, 0.3333333333333333, 0.5, 25, 3.0031302587536793e-30),
    (0.9, 0.3, 0.3333333333333333, 2.0, 0, 0.1418335719657925),
    (0.9, 0.3, 0.3333333333333333, 2.0, 1, 0.24079378942055524),
    (0.9, 0.3, 0.3333333333333333, 2.0, 3, 0.1814714833074778),
    (0.9, 0.3, 0.3333333333333333, 2.0, 10, 0.00020131919349609755),
    (0.9, 0.3, 0.3333333333333333, 2.0, 25, 3.5073948153471775e-16),
    (0.9, 0.3, 0.3333333333333333, 5.0, 0, 0.02144196087264656),
    (0.9, 0.3, 0.3333333333333333, 5.0, 1, 0.04618048431962246),
    (0.9, 0.3, 0.3333333333333333, 5.0, 3, 0.1116724053375264),
    (0.9, 0.3, 0.3333333333333333, 5.0, 10, 0.03612791663369956),
    (0.9, 0.3, 0.3333333333333333, 5.0, 25, 3.5804103002746614e-08),
    (0.9, 0.6, 0.3333333333333333, 0.5, 0, 0.7760915182950311),
    (0.9, 0.6, 0.3333333333333333, 0.5, 1, 0.17683471557229988),
    (0.9, 0.6, 0.3333333333333333, 0.5, 3, 0.006786555152339238),
    (0.9, 0.6, 0.3333333333333333, 0.5, 10, 3.959245768833774e-10),
    (0.9, 0.6, 0.3333333333333333, 0.5, 25, 5.931564826697323e-31),
    (0.9, 0.6, 0.3333333333333333, 2.0, 0, 0.4716279384711782),
    (0.9, 0.6, 0.3333333333333333, 2.0, 1, 0.21939696882243373),
    (0.9, 0.6, 0.3333333333333333, 2.0, 3, 0.08719886335249742),
    (0.9, 0.6, 0.3333333333333333, 2.0, 10, 5.665028092333531e-05),
    (0.9, 0.6, 0.3333333333333333, 2.0, 25, 7.126831469444355e-17),
    (0.9, 0.6, 0.3333333333333333, 5.0, 0, 0.31144648581101536),
    (0.9, 0.6, 0.3333333333333333, 5.0, 1, 0.12937032801794054),
    (0.9, 0.6, 0.3333333333333333, 5.0, 3, 0.09855910334736563),
    (0.9, 0.6, 0.3333333333333333, 5.0, 10, 0.012058289513757068),
    (0.9, 0.6, 0.3333333333333333, 5.0, 25, 7.75155623012438e-09),
    (0.9, 0.6, 0.6666666666666666, 0.5, 0, 0.5769261935215467),
    (0.9, 0.6, 0.6666666666666666, 0.5, 1, 0.3112520117477069),
    (0.9, 0.6, 0.6666666666666666, 0.5, 3, 0.01824884388240221),
    (0.9, 0.6, 0.6666666666666666, 0.5, 10, 1.6503675602321956e-09),
    (0.9, 0.6, 0.6666666666666666, 0.5, 25, 3.3971700637444234e-30),
    (0.9, 0.6, 0.6666666666666666, 2.0, 0, 0.12795642085351575),
    (0.9, 0.6, 0.6666666666666666, 2.0, 1, 0.23546460280851197),
    (0.9, 0.6, 0.6666666666666666, 2.0, 3, 0.18742210952205482),
    (0.9, 0.6, 0.6666666666666666, 2.0, 10, 0.00021926310979706551),
    (0.9, 0.6, 0.6666666666666666, 2.0, 25, 3.955306102065734e-16),
    (0.9, 0.6, 0.6666666666666666, 5.0, 0, 0.014762794086658582),
    (0.9, 0.6, 0.6666666666666666, 5.0, 1, 0.03863281140005279),
    (0.9, 0.6, 0.6666666666666666, 5.0, 3, 0.10765753664083957),
    (0.9, 0.6, 0.6666666666666666, 5.0, 10, 0.03863151170975718),
    (0.9, 0.6, 0.6666666666666666, 5.0, 25, 4.0097218684670755e-08),
    (0.9, 0.9, 0.5, 0.5, 0, 0.7681908025727286),
    (0.9, 0.9, 0.5, 0.5, 1, 0.18535530465342362),
    (0.9, 0.9, 0.5, 0.5, 3, 0.006470984643727783),
    (0.9, 0.9, 0.5, 0.5, 10, 3.2553625776602705e-10),
    (0.9, 0.9, 0.5, 0.5, 25, 4.322699452286106e-31),
    (0.9, 0.9, 0.5, 2.0, 0, 0.4407594126330247),
    (0.9, 0.9, 0.5, 2.0, 1, 0.24387915619700393),
    (0.9, 0.9, 0.5, 2.0, 3, 0.08812415907928596),
    (0.9, 0.9, 0.5, 2.0, 10, 4.78274327260586e-05),
    (0.9, 0.9, 0.5, 2.0, 25, 5.2568201369921e-17),
    (0.9, 0.9, 0.5, 5.0, 0, 0.2590654390490844),
    (0.9, 0.9, 0.5, 5.0, 1, 0.14806544814585393),
    (0.9, 0.9, 0.5, 5.0, 3, 0.11143309495591532),
    (0.9, 0.9, 0.5, 5.0, 10, 0.010846939367907446),
    (0.9, 0.9, 0.5, 5.0, 25, 5.872539048068668e-09),
    (0.9, 0.9, 1.0, 0.5, 0, 0.5684061196107931),
    (0.9, 0.9, 1.0, 0.5, 1, 0.3159141879695819),
    (0.9, 0.9, 1.0, 0.5, 3, 0.019046323522696758),
    (0.9, 0.9, 1.0, 0.5, 10, 1.7882492161672418e-09),
    (0.9, 0.9, 1.0, 0.5, 25, 3.793393205160135e-30),
    (0.9, 0.9, 1.0, 2.0, 0, 0.11818822315741233),
    (0.9, 0.9, 1.0, 2.0, 1, 0.23041259487452181),
    (0.9, 0.9, 1.0, 2.0, 3, 0.1919599927159311),
    (0.9, 0.9, 1.0, 2.0, 10, 0.00023593335973239913),
    (0.9, 0.9, 1.0, 2.0, 25, 4.403106819823306e-16),
    (0.9, 0.9, 1.0, 5.0, 0, 0.010913681006797559),
    (0.9, 0.9, 1.0, 5.0, 1, 0.033101803951364986),
    (0.9, 0.9, 1.0, 5.0, 3, 0.1036386629658046),
    (0.9, 0.9, 1.0, 5.0, 10, 0.040838441255181615),
    (0.9, 0.9, 1.0, 5.0, 25, 4.433223293839474e-08),
    (0.1, 1.0, 1.0, 1.0, 0, 0.4855644643110821),
    (0.1, 1.0, 1.0, 1.0, 1, 0.25082402118662145),
    (0.1, 1.0, 1.0, 1.0, 5, 0.01717007612609169),
    (0.1, 1.0, 1.0, 1.0, 20, 4.930989695922381e-07),
    (0.1, 1.0, 1.0, 1.0, 40, 2.3247369150513696e-13),
    (0.1, 1.0, 1.0, 1.0, 80, 1.497985989383806e-26),
    (0.1, 1.0, 1.0, 1.0, 150, 1.9711044945582707e-49),
    (0.5, 1.0, 1.0, 1.0, 0, 0.427583576155807),
    (0.5, 1.0, 1.0, 1.0, 1, 0.27321201478389856),
    (0.5, 1.0, 1.0, 1.0, 5, 0.016661869090414363),
    (0.5, 1.0, 1.0, 1.0, 20, 7.282264272608537e-10),
    (0.5, 1.0, 1.0, 1.0, 40, 8.18213033887879e-23),
    (0.5, 1.0, 1.0, 1.0, 80, 6.144673342156275e-54),
    (0.5, 1.0, 1.0, 1.0, 150, 1.9198048574641986e-117),
    (0.5, 1.0, 1.0, 20.0, 0, 0.02817434874105132),
    (0.5, 1.0, 1.0, 20.0, 1, 0.028104349069196025),
    (0.5, 1.0, 1.0, 20.0, 5, 0.027485268822179876),
    (0.5, 1.0, 1.0, 20.0, 20, 0.021299076429743376),
    (0.5, 1.0, 1.0, 20.0, 40, 0.010134923090729648),
    (0.5, 1.0, 1.0, 20.0, 80, 0.0006411687040171954),
    (0.5, 1.0, 1.0, 20.0, 150, 1.3643434112370835e-07),
    (0.75, 1.0, 1.0, 1.0, 0, 0.39310830281575404),
    (0.75, 1.0, 1.0, 1.0, 1, 0.3096502934679486),
    (0.75, 1.0, 1.0, 1.0, 5, 0.009737461922880953),
    (0.75, 1.0, 1.0, 1.0, 20, 5.689978614371213e-14),
    (0.75, 1.0, 1.0, 1.0, 40, 1.6982488873096267e-34),
    (0.75, 1.0, 1.0, 1.0, 80, 2.9853958938606187e-84),
    (0.75, 1.0, 1.0, 1.0, 150, 6.278502210918786e-186),
    (0.75, 1.0, 1.0, 20.0, 0, 0.014527522154459504),
    (0.75, 1.0, 1.0, 20.0, 1, 0.015294944345438677),
    (0.75, 1.0, 1.0, 20.0, 5, 0.01863537695355357),
    (0.75, 1.0, 1.0, 20.0, 20, 0.02938323185363573),
    (0.75, 1.0, 1.0, 20.0, 40, 0.011363779774489918),
    (0.75, 1.0, 1.0, 20.0, 80, 6.862477326958257e-07),
    (0.75, 1.0, 1.0, 20.0, 150, 8.447895243843884e-24),
    (0.75, 1.0, 1.0, 40.0, 0, 0.007075674755826428),
    (0.75, 1.0, 1.0, 40.0, 1, 0.007259909534805638),
    (0.75, 1.0, 1.0, 40.0, 5, 0.008035449463028348),
    (0.75, 1.0, 1.0, 40.0, 20, 0.011357751999603054),
    (0.75, 1.0, 1.0, 40.0, 40, 0.01495978470723995),
    (0.75, 1.0, 1.0, 40.0, 80, 0.005664083354903669),
    (0.75, 1.0, 1.0, 40.0, 150, 1.7042589758135322e-07),
    (0.75, 1.0, 1.0, 100.0, 0, 0.0027866210194390935),
    (0.75, 1.0, 1.0, 100.0, 1, 0.002815340112007431),
    (0.75, 1.0, 1.0, 100.0, 5, 0.002932755311449917),
    (0.75, 1.0, 1.0, 100.0, 20, 0.003408191803919894),
    (0.75, 1.0, 1.0, 100.0, 40, 0.004115585734697118),
    (0.75, 1.0, 1.0, 100.0, 80, 0.005550371146545301),
    (0.75, 1.0, 1.0, 100.0, 150, 0.005347502069937934),
    (0.9, 1.0, 1.0, 1.0, 0, 0.3760660214246419),
    (0.9, 1.0, 1.0, 1.0, 1, 0.34238755308513547),
    (0.9, 1.0, 1.0, 1.0, 5, 0.005263648395847877),
    (0.9, 1.0, 1.0, 1.0, 20, 3.549079274871559e-17),
    (0.9, 1.0, 1.0, 1.0, 40, 5.488414879027349e-43),
    (0.9, 1.0, 1.0, 1.0, 80, 2.9733921632837903e-105),
    (0.9, 1.0, 1.0, 1.0, 150, 6.057527951337683e-232),
    (0.9, 1.0, 1.0, 20.0, 0, 0.005749507816109113),
    (0.9, 1.0, 1.0, 20.0, 1, 0.006311687942487246),
    (0.9, 1.0, 1.0, 20.0, 5, 0.009531036933085437),
    (0.9, 1.0, 1.0, 20.0, 20, 0.049012902031732065),
    (0.9, 1.0, 1.0, 20.0, 40, 0.0020308899759269475),
    (0.9, 1.0, 1.0, 20.0, 80, 6.790493495406292e-15),
    (0.9, 1.0, 1.0, 20.0, 150, 1.4412893204291446e-51),
    (0.9, 1.0, 1.0, 40.0, 0, 0.0027434496977920995),
    (0.9, 1.0, 1.0, 40.0, 1, 0.0028662748091485527),
    (0.9, 1.0, 1.0, 40.0, 5, 0.0034420145809958918),
    (0.9, 1.0, 1.0, 40.0, 20, 0.007787039134809421),
    (0.9, 1.0, 1.0, 40.0, 40, 0.02590211875663588),
    (0.9, 1.0, 1.0, 40.0, 80, 0.00022043222823941126),
    (0.9, 1.0, 1.0, 40.0, 150, 1.6023470516275326e-21),
    (0.9, 1.0, 1.0, 100.0, 0, 0.001068972418287089),
    (0.9, 1.0, 1.0, 100.0, 1, 0.001087229287656631),
    (0.9, 1.0, 1.0, 100.0, 5, 0.0011647268808797902),
    (0.9, 1.0, 1.0, 100.0, 20, 0.0015336898074015985),
    (0.9, 1.0, 1.0, 100.0, 40, 0.002319986336242904),
    (0.9, 1.0, 1.0, 100.0, 80, 0.006285396158226653),
    (0.9, 1.0, 1.0, 100.0, 150, 0.005367110009741246),
    (0.99, 1.0, 1.0, 1.0, 0, 0.3685483180603396),
    (0.99, 1.0, 1.0, 1.0, 1, 0.36524375288456573),
    (0.99, 1.0, 1.0, 1.0, 5, 0.003250755594583836),
    (0.99, 1.0, 1.0, 1.0, 20, 2.6535978407727685e-19),
    (0.99, 1.0, 1.0, 1.0, 40, 1.885222178821635e-48),
    (0.99, 1.0, 1.0, 1.0, 80, 1.6214170465452467e-118),
    (0.99, 1.0, 1.0, 1.0, 150, 1.1091251610929057e-260),
    (0.99, 1.0, 1.0, 20.0, 0, 0.000561623483674953),
    (0.99, 1.0, 1.0, 20.0, 1, 0.0006323436203820658),
    (0.99, 1.0, 1.0, 20.0, 5, 0.00118890436680029),
    (0.99, 1.0, 1.0, 20.0, 20, 0.08427988656525805),
    (0.99, 1.0, 1.0, 20.0, 40, 4.970645613352494e-05),
    (0.99, 1.0, 1.0, 20.0, 80, 3.957058352748217e-23),
    (0.99, 1.0, 1.0, 20.0, 150, 2.777383299641706e-74),
    (0.99, 1.0, 1.0, 40.0, 0, 0.000264827229357445),
    (0.99, 1.0, 1.0, 40.0, 1, 0.00027935697866136877),
    (0.99, 1.0, 1.0, 40.0, 5, 0.00035181200781185843),
    (0.99, 1.0, 1.0, 40.0, 20, 0.0014482453746293134),
    (0.99, 1.0, 1.0, 40.0, 40, 0.05805063274220322),
    (0.99, 1.0, 1.0, 40.0, 80, 3.621905389158317e-08),
    (0.99, 1.0, 1.0, 40.0, 150, 2.489905890475281e-38),
    (0.99, 1.0, 1.0, 100.0, 0, 0.00010261344540995125),
    (0.99, 1.0, 1.0, 100.0, 1, 0.00010471943847104204),
    (0.99, 1.0, 1.0, 100.0, 5, 0.00011383066610020245),
    (0.99, 1.0, 1.0, 100.0, 20, 0.00016135746782438163),
    (0.99, 1.0, 1.0, 100.0, 40, 0.00029169413063246134),
    (0.99, 1.0, 1.0, 100.0, 80, 0.005424323760816063),
    (0.99, 1.0, 1.0, 100.0, 150, 4.04887270929227e-06),
    (0.2, 0.2, 1.0, 1.0, 0, 0.23261496202108878),
    (0.2, 0.2, 1.0, 1.0, 2, 0.19205558347992197),
    (0.2, 0.2, 1.0, 1.0, 10, 0.0025313688799897052),
    (0.2, 0.2, 1.0, 1.0, 40, 2.2077593505786569e-13),
    (0.5, 0.5, 1.0, 1.0, 0, 0.2421278438586879),
    (0.5, 0.5, 1.0, 1.0, 2, 0.21063921929343948),
    (0.5, 0.5, 1.0, 1.0, 10, 0.00044008532043523883),
    (0.5, 0.5, 1.0, 1.0, 40, 5.845797025073365e-22),
    (0.5, 0.5, 1.0, 5.0, 0, 0.018905692684612084),
    (0.5, 0.5, 1.0, 5.0, 2, 0.05004280711101337),
    (0.5, 0.5, 1.0, 5.0, 10, 0.062161809893178654),
    (0.5, 0.5, 1.0, 5.0, 40, 1.3757491275531482e-05),
    (0.5, 0.5, 1.0, 30.0, 0, 0.0005546321916935123),
    (0.5, 0.5, 1.0, 30.0, 2, 0.0016574610623978012),
    (0.5, 0.5, 1.0, 30.0, 10, 0.005853830051889272),
    (0.5, 0.5, 1.0, 30.0, 40, 0.013954102207955418),
    (0.8, 0.8, 1.0, 1.0, 0, 0.2977445831698964),
    (0.8, 0.8, 1.0, 1.0, 2, 0.21445622465272898),
    (0.8, 0.8, 1.0, 1.0, 10, 6.505856107167882e-06),
    (0.8, 0.8, 1.0, 1.0, 40, 7.258331839406808e-37),
    (0.8, 0.8, 1.0, 5.0, 0, 0.013771358621464334),
    (0.8, 0.8, 1.0, 5.0, 2, 0.05803208685855779),
    (0.8, 0.8, 1.0, 5.0, 10, 0.06083356829544865),
    (0.8, 0.8, 1.0, 5.0, 40, 4.0631880920237557e-13),
    (0.8, 0.8, 1.0, 30.0, 0, 0.00024544806590891255),
    (0.8, 0.8, 1.0, 30.0, 2, 0.0008022155233239478),
    (0.8, 0.8, 1.0, 30.0, 10, 0.004140068071457652),
    (0.8, 0.8, 1.0, 30.0, 40, 0.027781523453496722),
    (0.4, 1.0, 2.5, 0.7, 0, 0.18837290063848333),
    (0.4, 1.0, 2.5, 0.7, 4, 0.08649261128791318),
    (0.4, 1.0, 2.5, 0.7, 30, 2.921818037295326e-15),
    (0.4, 1.0, 2.5, 0.7, 90, 9.208100867376559e-60),
    (0.4, 1.0, 2.5, 8.0, 0, 0.0003883293403582721),
    (0.4, 1.0, 2.5, 8.0, 4, 0.006963761614187783),
    (0.4, 1.0, 2.5, 8.0, 30, 0.023997228130755364),
    (0.4, 1.0, 2.5, 8.0, 90, 1.0724203724107376e-06),
    (0.7, 0.5, 0.2, 0.7, 0, 0.8094794422457824),
    (0.7, 0.5, 0.2, 0.7, 4, 0.003201675951889557),
    (0.7, 0.5, 0.2, 0.7, 30, 4.450045941805411e-27),
    (0.7, 0.5, 0.2, 0.7, 90, 1.552518927779839e-104),
    (0.7, 0.5, 0.2, 8.0, 0, 0.48018082367692977),
    (0.7, 0.5, 0.2, 8.0, 4, 0.04252309420471822),
    (0.7, 0.5, 0.2, 8.0, 30, 8.070114514807181e-05),
    (0.7, 0.5, 0.2, 8.0, 90, 7.52571168268151e-24),
    (0.7, 0.5, 0.2, 60.0, 0, 0.316707529309591),
    (0.7, 0.5, 0.2, 60.0, 4, 0.023213475112199414),
    (0.7, 0.5, 0.2, 60.0, 30, 0.005843571220111677),
    (0.7, 0.5, 0.2, 60.0, 90, 0.0021020548437734096),
    (0.05, 0.8, 3.0, 0.7, 0, 0.1911272316839363),
    (0.05, 0.8, 3.0, 0.7, 4, 0.0925797991809272),
    (0.05, 0.8, 3.0, 0.7, 30, 3.638288855896809e-10),
    (0.05, 0.8, 3.0, 0.7, 90, 6.876136726982818e-33),
    (0.95, 1.0, 1.05, 0.7, 0, 0.47603823205860124),
    (0.95, 1.0, 1.05, 0.7, 4, 0.006716517741254648),
    (0.95, 1.0, 1.05, 0.7, 30, 7.020196223223768e-36),
    (0.95, 1.0, 1.05, 0.7, 90, 2.248807187627077e-144),
    (0.95, 1.0, 1.05, 8.0, 0, 0.0018949234862307243),
    (0.95, 1.0, 1.05, 8.0, 4, 0.048500742411084215),
    (0.95, 1.0, 1.05, 8.0, 30, 4.651888464934346e-08),
    (0.95, 1.0, 1.05, 8.0, 90, 2.5863270907311777e-53),
    (0.95, 1.0, 1.05, 60.0, 0, 4.696191409760559e-05),
    (0.95, 1.0, 1.05, 60.0, 4, 0.00011634695346648768),
    (0.95, 1.0, 1.05, 60.0, 30, 0.0017078277795860857),
    (0.95, 1.0, 1.05, 60.0, 90, 0.0028831960341611424),
];
