#ifndef SNER_TESTS_GOLDEN_CASES_H_
#define SNER_TESTS_GOLDEN_CASES_H_

// Worked examples for every tagging rule with the exact entities the shipped
// data must produce. Shared by the pipeline unit tests and the acceptance
// runner.

#include <string>
#include <utility>
#include <vector>

namespace sner::testing {

struct GoldenCase {
  std::string name;
  std::string text;
  // (label, surface) in text order; every other token is untagged.
  std::vector<std::pair<std::string, std::string>> entities;
};

inline const std::vector<GoldenCase>& GoldenCases() {
  static const std::vector<GoldenCase> cases = {
      {"date_dotted", "05.06.2016", {{"DATE", "05.06.2016"}}},
      {"date_slashed", "05/06/2016", {{"DATE", "05/06/2016"}}},
      {"time_1040", "10:40", {{"TIME", "10:40"}}},
      {"time_0230", "02:30", {{"TIME", "02:30"}}},
      {"date_month_year", "07 جولاءِ 2016", {{"DATE", "07 جولاءِ 2016"}}},
      {"date_month", "07 جولاءِ", {{"DATE", "07 جولاءِ"}}},
      {"date_year_word", "2016 سال", {{"DATE", "2016 سال"}}},
      {"email", "awaisjumani@yahoo.com", {{"EMAIL", "awaisjumani@yahoo.com"}}},
      {"url", "http://nlp.cs.nyu.edu", {{"URL", "http://nlp.cs.nyu.edu"}}},
      {"suffix_pur", "خيرپور", {{"LOCATION", "خيرپور"}}},
      {"suffix_pur_unlisted", "رحيمپور", {{"LOCATION", "رحيمپور"}}},
      {"suffix_stan", "بلوچستان", {{"LOCATION", "بلوچستان"}}},
      {"suffix_garr", "مظفرڳڙهه", {{"LOCATION", "مظفرڳڙهه"}}},
      {"suffix_nagar", "شانتينگر", {{"LOCATION", "شانتينگر"}}},
      {"suffix_abad", "اسلام‌آباد", {{"LOCATION", "اسلام‌آباد"}}},
      {"suffix_dad", "سعيداد", {{"PERSON", "سعيداد"}}},
      {"suffix_allah", "هدايت‌الله", {{"PERSON", "هدايت‌الله"}}},
      {"suffix_yat", "فلڪيات", {{"TERM", "فلڪيات"}}},
      {"person_marker", "زاهد حسين", {{"PERSON", "زاهد حسين"}}},
      {"gazetteer_name_three_words", "محمد علي جمائي", {{"PERSON", "محمد علي جمائي"}}},
      {"surname_trigger", "اويس جمائي", {{"PERSON", "اويس جمائي"}}},
      {"title_wazir_e_azam", "وزير اعظم نواز",
       {{"DESIGNATION", "وزير اعظم"}, {"PERSON", "نواز"}}},
      {"title_mrs", "مسس رحمت", {{"DESIGNATION", "مسس"}, {"PERSON", "رحمت"}}},
      {"postposition", "اويس جي گهر ۾ ڪتاب پيو آهي", {{"PERSON", "اويس"}}},
      {"number_words_list", "سڀون، ايٺ، نائون",
       {{"NUMBER", "سڀون"}, {"NUMBER", "ايٺ"}, {"NUMBER", "نائون"}}},
      {"number_words_three", "ڇهه سو پنج", {{"NUMBER", "ڇهه سو پنج"}}},
      {"initials", "جي اي مهر", {{"PERSON", "جي اي مهر"}}},
      {"initial", "جي مهر", {{"PERSON", "جي مهر"}}},
      {"abbreviation_ktn", "ڪي ٽي اين", {{"ABBREVIATION", "ڪي ٽي اين"}}},
      {"abbreviation_ddr", "ڊي ڊي آر", {{"ABBREVIATION", "ڊي ڊي آر"}}},
      {"org_keyword_sentence", "او هو سند يونيورسٽي ۾ پڙهي ٿو",
       {{"ORGANIZATION", "سند يونيورسٽي"}}},
      {"org_keyword_three_tokens", "شاه عبدالطيف يونيورسٽي",
       {{"ORGANIZATION", "شاه عبدالطيف يونيورسٽي"}}},
      {"composed_sentence", "اويس جمائي 05.06.2016 تي سنڌ يونيورسٽي ويو",
       {{"PERSON", "اويس جمائي"},
        {"DATE", "05.06.2016"},
        {"ORGANIZATION", "سنڌ يونيورسٽي"}}},
  };
  return cases;
}

}  // namespace sner::testing

#endif  // SNER_TESTS_GOLDEN_CASES_H_
