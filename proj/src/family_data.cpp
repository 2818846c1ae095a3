// Weierstrass families y^2 = x^3 + f_m(t) x + g_m(t), coefficients expanded, highest degree first.
#include "isogeny/family_data.hpp"

namespace iso::data {

const std::vector<RawFamily>& raw_families() {
  static const std::vector<RawFamily> v = {
    {4, 3,
     {"-3", "-18", "9"},
     {"2", "-36", "18", "0"},
     {{1, 2}, {1, 1}},
     {},
     {{2, 1}, {3, 1}},
     "46656"},
    {5, 6,
     {"-3", "-342", "-375", "-342", "-372"},
     {"2", "-522", "-4998", "-1044", "-10002", "-522", "-5002"},
     {{11, 2}},
     {{{"1", "0", "1"}, 1, 2}},
     {{2, 0}, {3, 0}, {5, 3}},
     "0"},
    {6, 6,
     {"-3", "-96", "450", "-648", "297"},
     {"2", "-192", "846", "-720", "-1890", "3888", "-1998"},
     {{3, 2}, {5, 3}, {3, 1}},
     {},
     {{2, 2}, {3, 1}},
     "-240734712102912"},
    {7, 6,
     {"-3", "690", "-1533", "2646", "-15435"},
     {"2", "1038", "-21000", "-2450", "-271656", "-43218", "-907578"},
     {{-7, 1}},
     {{{"1", "1", "7"}, 1, 1}},
     {{2, 0}, {3, 1}, {7, 3}},
     "0"},
    {8, 6,
     {"-3", "-72", "264", "-288", "96"},
     {"2", "-144", "492", "-288", "-768", "1152", "-448"},
     {{1, 1}, {3, 2}, {2, 1}},
     {},
     {{2, 2}, {3, 0}},
     "8916100448256"},
    {9, 6,
     {"-3", "72", "72", "24", "0"},
     {"2", "120", "-24", "-248", "-240", "-96", "-16"},
     {{-1, 1}},
     {},
     {{2, 1}, {3, 1}},
     "-940369969152"},
    {10, 12,
     {"-3", "354", "-1083", "1074", "-1800", "744", "-732", "24", "-12"},
     {"2", "510", "-7050", "15128", "-29226", "32790", "-39294", "22188", "-19104", "3968", "-1968", "-48", "16"},
     {{-2, 1}, {0, 1}, {1, 2}},
     {{{"1", "0", "1"}, 1, 2}},
     {{2, 1}, {3, 0}, {5, 3}},
     "0"},
    {12, 12,
     {"-3", "324", "1980", "3564", "-810", "-10692", "-14580", "-8748", "-2187"},
     {"2", "540", "288", "-32292", "-206874", "-631800", "-1174176", "-1487160", "-1412802", "-1076004", "-629856", "-236196", "-39366"},
     {{-3, 1}, {-2, 1}, {-3, 2}, {-1, 1}, {0, 1}},
     {},
     {{2, 2}, {3, 3}},
     "4622720757448038255263753165217680396829984590659584"},
    {13, 12,
     {"-3", "702", "-2961", "9090", "-51015", "41220", "-288252", "64368", "-525504"},
     {"2", "1026", "-25092", "58950", "-628332", "1018854", "-6908670", "7232292", "-40707048", "22731264", "-122763168", "26374464", "-146744192"},
     {{-3, 1}},
     {{{"1", "1", "7"}, 1, 1}, {{"1", "0", "4"}, 1, 2}},
     {{2, 1}, {3, 1}, {13, 3}},
     "0"},
    {16, 12,
     {"-3", "-144", "1296", "-4608", "8688", "-9216", "5184", "-1152", "-48"},
     {"2", "-288", "2376", "-5328", "-17436", "144576", "-447552", "831744", "-1019712", "838656", "-449280", "142848", "-20608"},
     {{1, 1}, {3, 2}, {2, 1}},
     {},
     {{2, 2}, {3, 4}},
     "79496847203390844133441536"},
    {18, 18,
     {"-3", "-720", "-6480", "-20136", "-47520", "-51840", "-80640", "-34560", "-103680", "-768", "-46080", "0", "-768"},
     {"2", "-1008", "-33264", "-245976", "-1054368", "-2818368", "-5902800", "-8434944", "-12337920", "-11806592", "-17192448", "-8515584", "-15737856", "-1290240", "-8515584", "12288", "-1032192", "0", "8192"},
     {{-1, 1}, {0, 1}, {2, 1}},
     {},
     {{2, 4}, {3, 5}},
     "-33437709287124425531306402022628232344688964113632838965992492311609470270323214772439046383334311753928693446051860989743180627836928"},
    {25, 18,
     {"-3", "-720", "-6522", "-29520", "-130545", "-357804", "-1036650", "-1945116", "-3985155", "-5034780", "-7168668", "-5096880", "-4504512"},
     {"2", "-1008", "-33222", "-266112", "-1697100", "-7746516", "-31166566", "-100050624", "-296106924", "-718791300", "-1640941374", "-3076776144", "-5469363286", "-7806080916", "-10604052600", "-10805918112", "-10550896032", "-6245506368", "-3679762048"},
     {{1, 1}},
     {{{"1", "0", "4"}, 1, 2}},
     {{2, 2}, {3, 0}, {5, 5}},
     "0"},
  };
  return v;
}

}  // namespace iso::data
