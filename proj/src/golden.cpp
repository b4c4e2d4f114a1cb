#include "bns/golden.hpp"

namespace bns {

namespace {

struct GoldenEntry {
    int n;
    int s;
    const char* value;
};

// clang-format off
constexpr GoldenEntry kGolden[] = {
    {2, 1, "1"},
    {3, 1, "5"},
    {4, 1, "35"},
    {4, 2, "4"},
    {5, 1, "387"},
    {5, 2, "102"},
    {6, 1, "7007"},
    {6, 2, "2889"},
    {6, 3, "49"},
    {7, 1, "210912"},
    {7, 2, "115089"},
    {7, 3, "7007"},
    {8, 1, "10631868"},
    {8, 2, "6994572"},
    {8, 3, "901849"},
    {8, 4, "1764"},
    {9, 1, "900985244"},
    {9, 2, "673987304"},
    {9, 3, "144298856"},
    {9, 4, "1489302"},
    {10, 1, "128622437240"},
    {10, 2, "105207867496"},
    {10, 3, "32490142348"},
    {10, 4, "945848476"},
    {10, 5, "184041"},
    {11, 1, "30966210579675"},
    {11, 2, "26959351496635"},
    {11, 3, "10955022440189"},
    {11, 4, "662654919034"},
    {11, 5, "944518861"},
    {12, 1, "12580216114825125"},
    {12, 2, "11439460153178700"},
    {12, 3, "5734064378518415"},
    {12, 4, "600268797504481"},
    {12, 5, "3128505277443"},
    {12, 6, "55294096"},
    {13, 1, "8626772206437975000"},
    {13, 2, "8085284537286414375"},
    {13, 3, "4766467800019182375"},
    {13, 4, "764765141679270475"},
    {13, 5, "10238704485605765"},
    {13, 6, "1757215525000"},
    {14, 1, "9986901971929869829500"},
    {14, 2, "9557633215532539485000"},
    {14, 3, "6390208799423434022625"},
    {14, 4, "1441330447360363147200"},
    {14, 5, "39883284449338622740"},
    {14, 6, "31549291544854616"},
    {14, 7, "47675849104"},
    {15, 1, "19519080693305828937415200"},
    {15, 2, "18949956228921855982385700"},
    {15, 3, "13969410998712641496783000"},
    {15, 4, "4152493908912199929945075"},
    {15, 5, "204906100267058283679500"},
    {15, 6, "506108207011474868400"},
    {15, 7, "9503245338765360"},
    {16, 1, "64407656627191028079791846640"},
    {16, 2, "63144359138386747743715394640"},
    {16, 3, "50198563563919013122322373540"},
    {16, 4, "18705823805304944943701823900"},
    {16, 5, "1479675893764040036587431315"},
    {16, 6, "8932759443524965167457800"},
    {16, 7, "951434093994335362640"},
    {16, 8, "117727187246656"},
    {17, 1, "358804774730434175758129259673456"},
    {17, 2, "354105577359757906766371948697376"},
    {17, 3, "298333903708787500221857600739936"},
    {17, 4, "133912858837890294182713812604536"},
    {17, 5, "15669580544590486163684302616040"},
    {17, 6, "195234062777004744115907889066"},
    {17, 7, "77617468143851451332322960"},
    {17, 8, "148590087937175420256"},
    {18, 1, "3374501770056834424668067005366508160"},
    {18, 2, "3345186415262559017533955220394878080"},
    {18, 3, "2946094160268159399942635677670006000"},
    {18, 4, "1542051040512127018766643769731903632"},
    {18, 5, "250711193443677493960123784595089380"},
    {18, 6, "5695769733133631831672720731794252"},
    {18, 7, "6469250261084028486818521377683"},
    {18, 8, "84778099221899163096886968"},
    {18, 9, "831443906113411600"},
    {19, 1, "53576975973345090138316376635217569387788"},
    {19, 2, "53270072499641082201198634936685040618732"},
    {19, 3, "48517940677403477178301346505128327029748"},
    {19, 4, "28829134880775563145866710298765418642088"},
    {19, 5, "6193973979899248680612126583699721493780"},
    {19, 6, "233438991061758469376565209482737854672"},
    {19, 7, "628282787528898950170898927382130672"},
    {19, 8, "36208603232194160709384879994300"},
    {19, 9, "6693451140998292061585400"},
    {20, 1, "1435985354364704216564266803990901495284513968"},
    {20, 2, "1430590451354449063721068755633229789198660380"},
    {20, 3, "1336289815208055474404048759131669563982545640"},
    {20, 4, "881410992082437335865516641683862633616426168"},
    {20, 5, "240194284338153882283352726137805109829801860"},
    {20, 6, "13940838952484992304062323074600042578016516"},
    {20, 7, "77412505786986088748219280737825798922720"},
    {20, 8, "14735602647010234326105847627175396848"},
    {20, 9, "22142431679094238038503945163100"},
    {20, 10, "16779127803917965290000"},
};
// clang-format on

}  // namespace

const std::map<std::pair<int, int>, ExactInt>& golden_table() {
    static const std::map<std::pair<int, int>, ExactInt> table = [] {
        std::map<std::pair<int, int>, ExactInt> t;
        for (const auto& e : kGolden) t.emplace(std::make_pair(e.n, e.s), ExactInt(e.value));
        return t;
    }();
    return table;
}

std::optional<ExactInt> golden_value(int n, int s) {
    if (n < 2 || n > golden_n_max() || s < 1 || s > n) return std::nullopt;
    const auto& t = golden_table();
    if (auto it = t.find({n, s}); it != t.end()) return it->second;
    if (s > n / 2) return ExactInt(0);  // vanishing entries are omitted in the table
    return std::nullopt;
}

int golden_n_max() { return 20; }

std::string golden_data_path() {
#ifdef BNS_GOLDEN_DATA_PATH
    return BNS_GOLDEN_DATA_PATH;
#else
    return "data/golden_bns.json";
#endif
}

}  // namespace bns
