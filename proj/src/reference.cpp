#include "cyq/reference.hpp"

namespace cyq::reference {

namespace {

std::vector<Rational> parse_all(std::initializer_list<const char *> xs)
{
    std::vector<Rational> out;
    for (const char *x : xs)
        out.push_back(Rational::parse(x));
    return out;
}

} // namespace

const std::vector<NormalizedTable> &quintic_tables()
{
    static const std::vector<NormalizedTable> tables = {
        {"(1/24)t0", 0, Rational(1, 24),
         parse_all({"1/120", "1", "175", "117625", "111784375", "126958105626", "160715581780591",
                    "218874699262438350", "314179164066791400375", "469234842365062637809375",
                    "722875994952367766020759550"}),
         Rational(1, 120)},
        {"(-1/750)t1", 1, Rational(-1, 750),
         parse_all({"1/30", "3", "930", "566375", "526770000", "592132503858", "745012928951258",
                    "1010500474677945510", "1446287695614437271000", "2155340222852696651995625",
                    "3314709711759484241245738380"}),
         Rational(1, 30)},
        {"(-1/50)t2", 2, Rational(-1, 50),
         parse_all({"7/10", "107", "50390", "29007975", "26014527500", "28743493632402", "35790559257796542",
                    "48205845153859479030", "68647453506412345755300", "101912303698877609329100625",
                    "156263153250677320910779548340"}),
         Rational(7, 10)},
        {"(-1/5)t3", 3, Rational(-1, 5),
         parse_all({"6/5", "71", "188330", "100324275", "86097977000", "93009679497426", "114266677893238146",
                    "152527823430305901510", "215812408812642816943200", "318839967257572460805706125",
                    "487033977592346076373921829980"}),
         Rational(6, 5)},
        {"-t4", 4, Rational(-1),
         parse_all({"0", "-1", "170", "41475", "32183000", "32678171250", "38612049889554", "50189141795178390",
                    "69660564113425804800", "101431587084669781525125", "153189681044166218779637500"}),
         Rational(0)},
        {"25t5", 5, Rational(25),
         parse_all({"-1/125", "15", "938", "587805", "525369650", "577718296190", "716515428667010",
                    "962043316960737646", "1366589803139580122090", "2024744003173189934886225",
                    "3099476777084481347731347688"}),
         Rational(-1, 125)},
        {"15625t6", 6, Rational(15625),
         parse_all({"0", "-15", "26249", "3512835", "2527019900", "2381349669050", "2699403828169815",
                    "3414337117855753978", "4647615139046603293280", "6668975996587015549602975",
                    "9957519516309695103093241870"}),
         Rational(0)},
    };
    return tables;
}

const std::vector<Rational> &instanton_list()
{
    static const std::vector<Rational> v = parse_all(
        {"5", "2875", "609250", "317206375", "242467530000", "229305888887625", "248249742118022000",
         "295091050570845659250", "375632160937476603550000", "503840510416985243645106250",
         "704288164978454686113488249750"});
    return v;
}

const std::vector<Rational> &j_coefficients()
{
    static const std::vector<Rational> v = parse_all(
        {"770", "421375", "274007500", "236982309375", "251719793608904", "304471121626588125",
         "401431674714748714500", "562487442070502650877500", "824572505123979141773850000",
         "1013472859153384775272872409691"});
    return v;
}

} // namespace cyq::reference
