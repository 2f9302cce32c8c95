#pragma once

#include <string>
#include <vector>

namespace d21::tables {

extern const std::vector<std::string> b0_tilting_minus;
extern const std::vector<std::string> b0_tilting_plus;
extern const std::vector<std::string> b0_tilting_irregular;
extern const std::vector<std::string> tilting_regular_minus;
extern const std::vector<std::string> tilting_regular_plus;
extern const std::vector<std::string> tilting_zero;
extern const std::vector<std::string> tilting_one_minus_kp;
extern const std::vector<std::string> tilting_kd_minus_one;
extern const std::vector<std::string> tilting_minus_one_plus;
extern const std::vector<std::string> tilting_one_plus;
extern const std::vector<std::string> tilting_kp_circle;
extern const std::vector<std::string> tilting_kd_circle;
extern const std::vector<std::string> tilting_below_minus_kp;
extern const std::vector<std::string> tilting_above_kd;
extern const std::vector<std::string> d1_tilting_zero;
extern const std::vector<std::string> d1_tilting_two;
extern const std::vector<std::string> d1_tilting_one_circle;
extern const std::vector<std::string> z1_tilting_minus_two;
extern const std::vector<std::string> z1_tilting_zero;
extern const std::vector<std::string> z1_tilting_minus_one_circle;
extern const std::vector<std::string> b0_comp_minus;
extern const std::vector<std::string> b0_comp_plus;
extern const std::vector<std::string> b0_comp_irregular;
extern const std::vector<std::string> comp_regular;
extern const std::vector<std::string> comp_zero;
extern const std::vector<std::string> comp_circle;
extern const std::vector<std::string> comp_kd_minus_one;
extern const std::vector<std::string> comp_kd_plus_one;
extern const std::vector<std::string> comp_one_minus_kp;
extern const std::vector<std::string> comp_minus_one_minus_kp;
extern const std::vector<std::string> d1_comp_zero;
extern const std::vector<std::string> z1_comp_zero;

}  // namespace d21::tables
