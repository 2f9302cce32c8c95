// Closed-form Verma flag and composition tables.
// Notation: X[index]signs, index in terms of n (the magnitude of a regular
// index, sign carried separately), kp and kd; o marks a circle position;
// a leading d marks a term present only when n = 2.

#include "d21/tables.hpp"

namespace d21::tables {

const std::vector<std::string> b0_tilting_minus = {
    "T[n]--- = M[n]--- + M[n+1]---",
    "T[n]--+ = M[n]--+ + M[n]--- + M[n+1]--+ + M[n+1]---",
    "T[n]-+- = M[n]-+- + M[n]--- + M[n+1]-+- + M[n+1]---",
    "T[n]-++ = M[n]-++ + M[n]-+- + M[n]--+ + M[n]--- + M[n+1]-++ + M[n+1]-+- + M[n+1]--+ + M[n+1]---",
};

const std::vector<std::string> b0_tilting_plus = {
    "T[n]+-- = M[n]+-- + M[n-1]+-- + M[n-1]--- + M[n]---",
    "T[n]+-+ = M[n]+-+ + M[n]+-- + M[n-1]+-+ + M[n-1]+-- + M[n-1]--+ + M[n-1]--- + M[n]--+ + M[n]---",
    "T[n]++- = M[n]++- + M[n]+-- + M[n-1]++- + M[n-1]+-- + M[n-1]-+- + M[n-1]--- + M[n]-+- + M[n]---",
    "T[n]+++ = M[n]+++ + M[n]++- + M[n]+-+ + M[n]+-- + M[n-1]+++ + M[n-1]++- + M[n-1]+-+ + M[n-1]+-- + M[n-1]-++ + M[n-1]-+- + M[n-1]--+ + M[n-1]--- + M[n]-++ + M[n]-+- + M[n]--+ + M[n]---",
};

const std::vector<std::string> b0_tilting_irregular = {
    "T[0]ooo = M[0]ooo + M[1]-++ + M[1]-+- + M[1]--+ + M[1]---",
    "T[1]+-- = M[1]+-- + M[0]ooo + M[1]-+- + M[1]--+ + 2M[1]--- + M[2]---",
    "T[1]+-+ = M[1]+-+ + M[1]+-- + M[0]ooo + M[1]--+ + M[1]---",
    "T[1]++- = M[1]++- + M[1]+-- + M[0]ooo + M[1]-+- + M[1]---",
    "T[1]+++ = M[1]+++ + M[1]++- + M[1]+-+ + M[1]+-- + 2M[0]ooo + M[1]-++ + M[1]-+- + M[1]--+ + M[1]---",
};

const std::vector<std::string> tilting_regular_minus = {
    "T[n]--- = M[n]--- + M[n+1]---",
    "T[n]--+ = M[n]--+ + M[n]--- + M[n+1]--+ + M[n+1]---",
    "T[n]-+- = M[n]-+- + M[n]--- + M[n+1]-+- + M[n+1]---",
    "T[n]-++ = M[n]-++ + M[n]-+- + M[n]--+ + M[n]--- + M[n+1]-++ + M[n+1]-+- + M[n+1]--+ + M[n+1]---",
};

const std::vector<std::string> tilting_regular_plus = {
    "T[n]+-- = M[n]+-- + M[n-1]+-- + M[n-1]--- + M[n]---",
    "T[n]+-+ = M[n]+-+ + M[n]+-- + M[n-1]+-+ + M[n-1]+-- + M[n-1]--+ + M[n-1]--- + M[n]--+ + M[n]---",
    "T[n]++- = M[n]++- + M[n]+-- + M[n-1]++- + M[n-1]+-- + M[n-1]-+- + M[n-1]--- + M[n]-+- + M[n]---",
    "T[n]+++ = M[n]+++ + M[n]++- + M[n]+-+ + M[n]+-- + M[n-1]+++ + M[n-1]++- + M[n-1]+-+ + M[n-1]+-- + M[n-1]-++ + M[n-1]-+- + M[n-1]--+ + M[n-1]--- + M[n]-++ + M[n]-+- + M[n]--+ + M[n]---",
};

const std::vector<std::string> tilting_zero = {
    "T[0]o-- = M[0]o-- + M[-1]--- + M[1]---",
    "T[0]o-+ = M[0]o-+ + M[0]o-- + M[-1]--+ + M[-1]--- + M[1]--+ + M[1]---",
    "T[0]o+- = M[0]o+- + M[0]o-- + M[1]-+- + M[-1]-+- + M[-1]--- + M[1]---",
    "T[0]o++ = M[0]o++ + M[0]o+- + M[0]o-+ + M[0]o-- + M[1]-++ + M[1]-+- + M[-1]-++ + M[-1]-+- + M[-1]--+ + M[-1]--- + M[1]--+ + M[1]---",
};

const std::vector<std::string> tilting_one_minus_kp = {
    "T[1-kp]--- = M[1-kp]--- + M[-kp]-o- + M[-1-kp]---",
    "T[1-kp]--+ = M[1-kp]--+ + M[1-kp]--- + M[-kp]-o+ + M[-kp]-o- + M[-1-kp]--+ + M[-1-kp]---",
    "T[1-kp]-+- = M[1-kp]-+- + M[1-kp]--- + 2M[-kp]-o- + M[-1-kp]-+- + M[-1-kp]---",
    "T[1-kp]-++ = M[1-kp]-++ + M[1-kp]-+- + M[1-kp]--+ + M[1-kp]--- + 2M[-kp]-o+ + 2M[-kp]-o- + M[-1-kp]-++ + M[-1-kp]-+- + M[-1-kp]--+ + M[-1-kp]---",
};

const std::vector<std::string> tilting_kd_minus_one = {
    "T[kd-1]--- = M[kd-1]--- + M[kd]--o + M[kd+1]---",
    "T[kd-1]--+ = M[kd-1]--+ + M[kd-1]--- + 2M[kd]--o + M[kd+1]--+ + M[kd+1]---",
    "T[kd-1]-+- = M[kd-1]-+- + M[kd-1]--- + M[kd]-+o + M[kd]--o + M[kd+1]-+- + M[kd+1]---",
    "T[kd-1]-++ = M[kd-1]-++ + M[kd-1]-+- + M[kd-1]--+ + M[kd-1]--- + 2M[kd]-+o + 2M[kd]--o + M[kd+1]-++ + M[kd+1]-+- + M[kd+1]--+ + M[kd+1]---",
};

const std::vector<std::string> tilting_minus_one_plus = {
    "T[-1]+-- = M[-1]+-- + M[0]o-- + M[-1]---",
    "T[-1]+-+ = M[-1]+-+ + M[-1]+-- + M[0]o-+ + M[0]o-- + M[-1]--+ + M[-1]---",
    "T[-1]++- = M[-1]++- + M[-1]+-- + M[0]o+- + M[0]o-- + M[-1]-+- + M[-1]---",
    "T[-1]+++ = M[-1]+++ + M[-1]++- + M[-1]+-+ + M[-1]+-- + M[0]o++ + M[0]o+- + M[0]o-+ + M[0]o-- + M[-1]-++ + M[-1]-+- + M[-1]--+ + M[-1]---",
};

const std::vector<std::string> tilting_one_plus = {
    "T[1]+-- = M[1]+-- + M[0]o-- + M[1]---",
    "T[1]+-+ = M[1]+-+ + M[1]+-- + M[0]o-+ + M[0]o-- + M[1]--+ + M[1]---",
    "T[1]++- = M[1]++- + M[1]+-- + M[0]o+- + M[0]o-- + M[1]-+- + M[1]---",
    "T[1]+++ = M[1]+++ + M[1]++- + M[1]+-+ + M[1]+-- + M[0]o++ + M[0]o+- + M[0]o-+ + M[0]o-- + M[1]-++ + M[1]-+- + M[1]--+ + M[1]---",
};

const std::vector<std::string> tilting_kp_circle = {
    "T[-kp]-o- = M[-kp]-o- + M[-1-kp]-+- + M[-1-kp]---",
    "T[-kp]-o+ = M[-kp]-o+ + M[-kp]-o- + M[-1-kp]-++ + M[-1-kp]-+- + M[-1-kp]--+ + M[-1-kp]---",
    "T[-kp]+o- = M[-kp]+o- + M[1-kp]++- + M[1-kp]+-- + M[1-kp]-+- + M[1-kp]--- + M[-kp]-o-",
    "T[-kp]+o+ = M[-kp]+o+ + M[-kp]+o- + M[1-kp]+++ + M[1-kp]++- + M[1-kp]+-+ + M[1-kp]+-- + M[1-kp]-++ + M[1-kp]-+- + M[1-kp]--+ + M[1-kp]--- + M[-kp]-o+ + M[-kp]-o-",
};

const std::vector<std::string> tilting_kd_circle = {
    "T[kd]--o = M[kd]--o + M[kd+1]--+ + M[kd+1]---",
    "T[kd]-+o = M[kd]-+o + M[kd]--o + M[kd+1]-++ + M[kd+1]-+- + M[kd+1]--+ + M[kd+1]---",
    "T[kd]+-o = M[kd]+-o + M[kd-1]+-+ + M[kd-1]+-- + M[kd-1]--+ + M[kd-1]--- + M[kd]--o",
    "T[kd]++o = M[kd]++o + M[kd]+-o + M[kd-1]+++ + M[kd-1]++- + M[kd-1]+-+ + M[kd-1]+-- + M[kd-1]-++ + M[kd-1]--+ + M[kd-1]-+- + M[kd-1]--- + M[kd]-+o + M[kd]--o",
};

const std::vector<std::string> tilting_below_minus_kp = {
    "T[-1-kp]+-- = M[-1-kp]+-- + M[-kp]+o- + M[1-kp]+-- + M[1-kp]--- + M[-kp]-o- + M[-1-kp]---",
    "T[-1-kp]+-+ = M[-1-kp]+-+ + M[-1-kp]+-- + M[-kp]+o+ + M[-kp]+o- + M[1-kp]+-+ + M[1-kp]+-- + M[1-kp]--+ + M[1-kp]--- + M[-kp]-o+ + M[-kp]-o- + M[-1-kp]--+ + M[-1-kp]---",
    "T[-1-kp]++- = M[-1-kp]++- + M[-1-kp]+-- + 2M[-kp]+o- + M[1-kp]++- + M[1-kp]+-- + M[1-kp]-+- + M[1-kp]--- + 2M[-kp]-o- + M[-1-kp]-+- + M[-1-kp]---",
    "T[-1-kp]+++ = M[-1-kp]+++ + M[-1-kp]++- + M[-1-kp]+-+ + M[-1-kp]+-- + 2M[-kp]+o+ + 2M[-kp]+o- + M[1-kp]+++ + M[1-kp]++- + M[1-kp]+-+ + M[1-kp]+-- + M[1-kp]-++ + M[1-kp]-+- + M[1-kp]--+ + M[1-kp]--- + 2M[-kp]-o+ + 2M[-kp]-o- + M[-1-kp]-++ + M[-1-kp]-+- + M[-1-kp]--+ + M[-1-kp]---",
};

const std::vector<std::string> tilting_above_kd = {
    "T[kd+1]+-- = M[kd+1]+-- + M[kd]+-o + M[kd-1]+-- + M[kd-1]--- + M[kd]--o + M[kd+1]---",
    "T[kd+1]+-+ = M[kd+1]+-+ + M[kd+1]+-- + 2M[kd]+-o + M[kd-1]+-+ + M[kd-1]+-- + M[kd-1]--+ + M[kd-1]--- + 2M[kd]--o + M[kd+1]--+ + M[kd+1]---",
    "T[kd+1]++- = M[kd+1]++- + M[kd+1]+-- + M[kd]++o + M[kd]+-o + M[kd-1]++- + M[kd-1]+-- + M[kd-1]-+- + M[kd-1]--- + M[kd]-+o + M[kd]--o + M[kd+1]-+- + M[kd+1]---",
    "T[kd+1]+++ = M[kd+1]+++ + M[kd+1]++- + M[kd+1]+-+ + M[kd+1]+-- + 2M[kd]++o + 2M[kd]+-o + M[kd-1]+++ + M[kd-1]++- + M[kd-1]+-+ + M[kd-1]+-- + M[kd-1]-++ + M[kd-1]-+- + M[kd-1]--+ + M[kd-1]--- + 2M[kd]-+o + 2M[kd]--o + M[kd+1]-++ + M[kd+1]-+- + M[kd+1]--+ + M[kd+1]---",
};

const std::vector<std::string> d1_tilting_zero = {
    "T[0]o-- = M[0]o-- + M[-1]--- + M[1]--o + M[2]---",
    "T[0]o-+ = M[0]o-+ + M[0]o-- + M[-1]--+ + M[-1]--- + 2M[1]--o + M[2]--+ + M[2]---",
    "T[0]o+- = M[0]o+- + M[0]o-- + M[1]-+o + M[-1]-+- + M[-1]--- + M[1]--o + M[2]-+- + M[2]---",
    "T[0]o++ = M[0]o++ + M[0]o+- + M[0]o-+ + M[0]o-- + 2M[1]-+o + M[-1]-++ + M[-1]-+- + M[-1]--+ + M[-1]--- + 2M[1]--o + M[2]-++ + M[2]-+- + M[2]--+ + M[2]---",
};

const std::vector<std::string> d1_tilting_two = {
    "T[2]+-- = M[2]+-- + M[1]+-o + M[0]o-- + M[1]--o + M[2]---",
    "T[2]+-+ = M[2]+-+ + M[2]+-- + 2M[1]+-o + M[0]o-+ + M[0]o-- + 2M[1]--o + M[2]--+ + M[2]---",
    "T[2]++- = M[2]++- + M[2]+-- + M[1]++o + M[1]+-o + M[0]o+- + M[0]o-- + M[1]-+o + M[1]--o + M[2]-+- + M[2]---",
    "T[2]+++ = M[2]+++ + M[2]++- + M[2]+-+ + M[2]+-- + 2M[1]++o + 2M[1]+-o + M[0]o++ + M[0]o+- + M[0]o-+ + M[0]o-- + 2M[1]-+o + 2M[1]--o + M[2]-++ + M[2]-+- + M[2]--+ + M[2]---",
};

const std::vector<std::string> d1_tilting_one_circle = {
    "T[1]--o = M[1]--o + M[2]--+ + M[2]---",
    "T[1]-+o = M[1]-+o + M[1]--o + M[2]-++ + M[2]-+- + M[2]--+ + M[2]---",
    "T[1]+-o = M[1]+-o + M[0]o-+ + M[0]o-- + M[1]--o",
    "T[1]++o = M[1]++o + M[1]+-o + M[0]o++ + M[0]o+- + M[0]o-+ + M[0]o-- + M[1]-+o + M[1]--o",
};

const std::vector<std::string> z1_tilting_minus_two = {
    "T[-2]+-- = M[-2]+-- + M[-1]+o- + M[0]o-- + M[-1]-o- + M[-2]---",
    "T[-2]+-+ = M[-2]+-+ + M[-2]+-- + M[-1]+o+ + M[-1]+o- + M[0]o-+ + M[0]o-- + M[-1]-o+ + M[-1]-o- + M[-2]--+ + M[-2]---",
    "T[-2]++- = M[-2]++- + M[-2]+-- + 2M[-1]+o- + M[0]o+- + M[0]o-- + 2M[-1]-o- + M[-2]-+- + M[-2]---",
    "T[-2]+++ = M[-2]+++ + M[-2]++- + M[-2]+-+ + M[-2]+-- + 2M[-1]+o+ + 2M[-1]+o- + M[0]o++ + M[0]o+- + M[0]o-+ + M[0]o-- + 2M[-1]-o+ + 2M[-1]-o- + M[-2]-++ + M[-2]-+- + M[-2]--+ + M[-2]---",
};

const std::vector<std::string> z1_tilting_zero = {
    "T[0]o-- = M[0]o-- + M[-1]-o- + M[1]--o + M[-2]--- + M[2]---",
    "T[0]o-+ = M[0]o-+ + M[0]o-- + M[-1]-o+ + M[-1]-o- + 2M[1]--o + M[-2]--+ + M[-2]--- + M[2]--+ + M[2]---",
    "T[0]o+- = M[0]o+- + M[0]o-- + M[1]-+o + 2M[-1]-o- + M[1]--o + M[2]-+- + M[-2]-+- + M[-2]--- + M[2]---",
    "T[0]o++ = M[0]o++ + M[0]o+- + M[0]o-+ + M[0]o-- + 2M[1]-+o + 2M[-1]-o+ + 2M[-1]-o- + 2M[1]--o + M[2]-++ + M[2]-+- + M[-2]-++ + M[-2]-+- + M[-2]--+ + M[-2]--- + M[2]--+ + M[2]---",
};

const std::vector<std::string> z1_tilting_minus_one_circle = {
    "T[-1]-o- = M[-1]-o- + M[-2]-+- + M[-2]---",
    "T[-1]-o+ = M[-1]-o+ + M[-1]-o- + M[-2]-++ + M[-2]-+- + M[-2]--+ + M[-2]---",
    "T[-1]+o- = M[-1]+o- + M[0]o+- + M[0]o-- + M[-1]-o-",
    "T[-1]+o+ = M[-1]+o+ + M[-1]+o- + M[0]o++ + M[0]o+- + M[0]o-+ + M[0]o-- + M[-1]-o+ + M[-1]-o-",
};

const std::vector<std::string> b0_comp_minus = {
    "M[n]--- = L[n]--- + L[n+1]---",
    "M[n]--+ = L[n]--+ + L[n]--- + L[n+1]--+ + L[n+1]---",
    "M[n]-+- = L[n]-+- + L[n]--- + L[n+1]-+- + L[n+1]---",
    "M[n]-++ = L[n]-++ + L[n]-+- + L[n]--+ + L[n]--- + L[n+1]-++ + L[n+1]-+- + L[n+1]--+ + L[n+1]---",
};

const std::vector<std::string> b0_comp_plus = {
    "M[n]+-- = L[n]+-- + L[n-1]+-- + L[n]--- + L[n+1]---",
    "M[n]+-+ = L[n]+-+ + L[n]+-- + L[n-1]+-+ + L[n-1]+-- + L[n]--+ + L[n]--- + L[n+1]--+ + L[n+1]---",
    "M[n]++- = L[n]++- + L[n]+-- + L[n-1]++- + L[n-1]+-- + L[n]-+- + L[n]--- + L[n+1]-+- + L[n+1]---",
    "M[n]+++ = L[n]+++ + L[n]++- + L[n]+-+ + L[n]+-- + L[n-1]+++ + L[n-1]++- + L[n-1]+-+ + L[n-1]+-- + L[n]-++ + L[n]-+- + L[n]--+ + L[n]--- + L[n+1]-++ + L[n+1]-+- + L[n+1]--+ + L[n+1]--- + dL[1]-++",
};

const std::vector<std::string> b0_comp_irregular = {
    "M[0]ooo = L[0]ooo + L[1]-++ + L[1]-+- + L[1]--+ + 2L[1]---",
    "M[1]+-- = L[1]+-- + L[0]ooo + L[1]--- + L[2]---",
    "M[1]+-+ = L[1]+-+ + L[1]+-- + L[0]ooo + L[1]-++ + L[1]--+ + L[1]--- + L[2]--+ + L[2]---",
    "M[1]++- = L[1]++- + L[1]+-- + L[0]ooo + L[1]-++ + L[1]-+- + L[1]--- + L[2]-+- + L[2]---",
    "M[1]+++ = L[1]+++ + L[1]++- + L[1]+-+ + L[1]+-- + L[0]ooo + 2L[1]-++ + L[1]-+- + L[1]--+ + L[1]--- + L[2]-++ + L[2]-+- + L[2]--+ + L[2]---",
};

const std::vector<std::string> comp_regular = {
    "M[n]--- = L[n]--- + L[n+1]---",
    "M[n]--+ = L[n]--+ + L[n]--- + L[n+1]--+ + L[n+1]---",
    "M[n]-+- = L[n]-+- + L[n]--- + L[n+1]-+- + L[n+1]---",
    "M[n]-++ = L[n]-++ + L[n]-+- + L[n]--+ + L[n]--- + L[n+1]-++ + L[n+1]-+- + L[n+1]--+ + L[n+1]---",
    "M[n]+-- = L[n]+-- + L[n-1]+-- + L[n]--- + L[n+1]---",
    "M[n]+-+ = L[n]+-+ + L[n]+-- + L[n-1]+-+ + L[n-1]+-- + L[n]--+ + L[n]--- + L[n+1]--+ + L[n+1]---",
    "M[n]++- = L[n]++- + L[n]+-- + L[n-1]++- + L[n-1]+-- + L[n]-+- + L[n]--- + L[n+1]-+- + L[n+1]---",
    "M[n]+++ = L[n]+++ + L[n]++- + L[n]+-+ + L[n]+-- + L[n-1]+++ + L[n-1]++- + L[n-1]+-+ + L[n-1]+-- + L[n]-++ + L[n]-+- + L[n]--+ + L[n]--- + L[n+1]-++ + L[n+1]-+- + L[n+1]--+ + L[n+1]---",
};

const std::vector<std::string> comp_zero = {
    "M[0]o-- = L[0]o-- + L[-1]--- + L[1]---",
    "M[0]o-+ = L[0]o-+ + L[0]o-- + L[-1]--+ + L[1]--+ + L[-1]--- + L[1]---",
    "M[0]o+- = L[0]o+- + L[0]o-- + L[-1]-+- + L[1]-+- + L[-1]--- + L[1]---",
    "M[0]o++ = L[0]o++ + L[0]o+- + L[0]o-+ + L[0]o-- + L[1]-++ + L[1]-+- + L[-1]-++ + L[-1]-+- + L[-1]--+ + L[1]--+ + L[-1]--- + L[1]---",
};

const std::vector<std::string> comp_circle = {
    "M[kd]--o = L[kd]--o + L[kd+1]--+ + 2L[kd+1]---",
    "M[kd]-+o = L[kd]-+o + L[kd]--o + L[kd+1]-++ + 2L[kd+1]-+- + L[kd+1]--+ + 2L[kd+1]---",
    "M[kd]+-o = L[kd]+-o + L[kd-1]+-+ + 2L[kd-1]+-- + L[kd]--o + L[kd+1]--+ + 2L[kd+1]---",
    "M[kd]++o = L[kd]++o + L[kd]+-o + L[kd-1]+++ + 2L[kd-1]++- + L[kd-1]+-+ + 2L[kd-1]+-- + L[kd]-+o + L[kd]--o + L[kd+1]-++ + 2L[kd+1]-+- + L[kd+1]--+ + 2L[kd+1]---",
    "M[-kp]-o- = L[-kp]-o- + L[-1-kp]-+- + 2L[-1-kp]---",
    "M[-kp]-o+ = L[-kp]-o+ + L[-kp]-o- + L[-1-kp]-++ + L[-1-kp]-+- + 2L[-1-kp]--+ + 2L[-1-kp]---",
    "M[-kp]+o- = L[-kp]+o- + L[1-kp]++- + 2L[1-kp]+-- + L[-kp]-o- + L[-1-kp]-+- + 2L[-1-kp]---",
    "M[-kp]+o+ = L[-kp]+o+ + L[-kp]+o- + L[1-kp]+++ + L[1-kp]++- + 2L[1-kp]+-+ + 2L[1-kp]+-- + L[-kp]-o+ + L[-kp]-o- + L[-1-kp]-++ + L[-1-kp]-+- + 2L[-1-kp]--+ + 2L[-1-kp]---",
};

const std::vector<std::string> comp_kd_minus_one = {
    "M[kd-1]--- = L[kd-1]--- + L[kd]--o + L[kd+1]---",
    "M[kd-1]--+ = L[kd-1]--+ + L[kd-1]--- + L[kd]--o + L[kd+1]--+ + L[kd+1]---",
    "M[kd-1]-+- = L[kd-1]-+- + L[kd-1]--- + L[kd]-+o + L[kd]--o + L[kd+1]-+- + L[kd+1]---",
    "M[kd-1]-++ = L[kd-1]-++ + L[kd-1]-+- + L[kd-1]--+ + L[kd-1]--- + L[kd]-+o + L[kd]--o + L[kd+1]-++ + L[kd+1]-+- + L[kd+1]--+ + L[kd+1]---",
    "M[kd-1]+-- = L[kd-1]+-- + L[kd-2]+-- + L[kd-1]--- + L[kd]--o + L[kd+1]---",
    "M[kd-1]+-+ = L[kd-1]+-+ + L[kd-1]+-- + L[kd-2]+-+ + L[kd-2]+-- + L[kd-1]--+ + L[kd-1]--- + L[kd]--o + L[kd+1]--+ + L[kd+1]---",
    "M[kd-1]++- = L[kd-1]++- + L[kd-1]+-- + L[kd-2]++- + L[kd-2]+-- + L[kd-1]-+- + L[kd-1]--- + L[kd]-+o + L[kd]--o + L[kd+1]-+- + L[kd+1]---",
    "M[kd-1]+++ = L[kd-1]+++ + L[kd-1]++- + L[kd-1]+-+ + L[kd-1]+-- + L[kd-2]+++ + L[kd-2]++- + L[kd-2]+-+ + L[kd-2]+-- + L[kd-1]-++ + L[kd-1]-+- + L[kd-1]--+ + L[kd-1]--- + L[kd]-+o + L[kd]--o + L[kd+1]-++ + L[kd+1]-+- + L[kd+1]--+ + L[kd+1]---",
};

const std::vector<std::string> comp_kd_plus_one = {
    "M[kd+1]--- = L[kd+1]--- + L[kd+2]---",
    "M[kd+1]--+ = L[kd+1]--+ + L[kd+1]--- + L[kd+2]--+ + L[kd+2]---",
    "M[kd+1]-+- = L[kd+1]-+- + L[kd+1]--- + L[kd+2]-+- + L[kd+2]---",
    "M[kd+1]-++ = L[kd+1]-++ + L[kd+1]-+- + L[kd+1]--+ + L[kd+1]--- + L[kd+2]-++ + L[kd+2]-+- + L[kd+2]--+ + L[kd+2]---",
    "M[kd+1]+-- = L[kd+1]+-- + L[kd]+-o + L[kd-1]+-- + L[kd+1]--- + L[kd+2]---",
    "M[kd+1]+-+ = L[kd+1]+-+ + L[kd+1]+-- + L[kd]+-o + L[kd-1]+-+ + L[kd-1]+-- + L[kd+1]--+ + L[kd+1]--- + L[kd+2]--+ + L[kd+2]---",
    "M[kd+1]++- = L[kd+1]++- + L[kd+1]+-- + L[kd]++o + L[kd]+-o + L[kd-1]++- + L[kd-1]+-- + L[kd+1]-+- + L[kd+1]--- + L[kd+2]-+- + L[kd+2]---",
    "M[kd+1]+++ = L[kd+1]+++ + L[kd+1]++- + L[kd+1]+-+ + L[kd+1]+-- + L[kd]++o + L[kd]+-o + L[kd-1]+++ + L[kd-1]++- + L[kd-1]+-+ + L[kd-1]+-- + L[kd+1]-++ + L[kd+1]-+- + L[kd+1]--+ + L[kd+1]--- + L[kd+2]-++ + L[kd+2]-+- + L[kd+2]--+ + L[kd+2]---",
};

const std::vector<std::string> comp_one_minus_kp = {
    "M[1-kp]--- = L[1-kp]--- + L[-kp]-o- + L[-1-kp]---",
    "M[1-kp]--+ = L[1-kp]--+ + L[1-kp]--- + L[-kp]-o+ + L[-kp]-o- + L[-1-kp]--+ + L[-1-kp]---",
    "M[1-kp]-+- = L[1-kp]-+- + L[1-kp]--- + L[-kp]-o- + L[-1-kp]-+- + L[-1-kp]---",
    "M[1-kp]-++ = L[1-kp]-++ + L[1-kp]-+- + L[1-kp]--+ + L[1-kp]--- + L[-kp]-o+ + L[-kp]-o- + L[-1-kp]-++ + L[-1-kp]-+- + L[-1-kp]--+ + L[-1-kp]---",
    "M[1-kp]+-- = L[1-kp]+-- + L[2-kp]+-- + L[1-kp]--- + L[-kp]-o- + L[-1-kp]---",
    "M[1-kp]+-+ = L[1-kp]+-+ + L[1-kp]+-- + L[2-kp]+-+ + L[2-kp]+-- + L[1-kp]--+ + L[1-kp]--- + L[-kp]-o+ + L[-kp]-o- + L[-1-kp]--+ + L[-1-kp]---",
    "M[1-kp]++- = L[1-kp]++- + L[1-kp]+-- + L[2-kp]++- + L[2-kp]+-- + L[1-kp]-+- + L[1-kp]--- + L[-kp]-o- + L[-1-kp]-+- + L[-1-kp]---",
    "M[1-kp]+++ = L[1-kp]+++ + L[1-kp]++- + L[1-kp]+-+ + L[1-kp]+-- + L[2-kp]+++ + L[2-kp]++- + L[2-kp]+-+ + L[2-kp]+-- + L[1-kp]-++ + L[1-kp]-+- + L[1-kp]--+ + L[1-kp]--- + L[-kp]-o+ + L[-kp]-o- + L[-1-kp]-++ + L[-1-kp]-+- + L[-1-kp]--+ + L[-1-kp]---",
};

const std::vector<std::string> comp_minus_one_minus_kp = {
    "M[-1-kp]--- = L[-1-kp]--- + L[-2-kp]---",
    "M[-1-kp]--+ = L[-1-kp]--+ + L[-1-kp]--- + L[-2-kp]--+ + L[-2-kp]---",
    "M[-1-kp]-+- = L[-1-kp]-+- + L[-1-kp]--- + L[-2-kp]-+- + L[-2-kp]---",
    "M[-1-kp]-++ = L[-1-kp]-++ + L[-1-kp]-+- + L[-1-kp]--+ + L[-1-kp]--- + L[-2-kp]-++ + L[-2-kp]-+- + L[-2-kp]--+ + L[-2-kp]---",
    "M[-1-kp]+-- = L[-1-kp]+-- + L[-kp]+o- + L[1-kp]+-- + L[-1-kp]--- + L[-2-kp]---",
    "M[-1-kp]+-+ = L[-1-kp]+-+ + L[-1-kp]+-- + L[-kp]+o+ + L[-kp]+o- + L[1-kp]+-+ + L[1-kp]+-- + L[-1-kp]--+ + L[-1-kp]--- + L[-2-kp]--+ + L[-2-kp]---",
    "M[-1-kp]++- = L[-1-kp]++- + L[-1-kp]+-- + L[-kp]+o- + L[1-kp]++- + L[1-kp]+-- + L[-1-kp]-+- + L[-1-kp]--- + L[-2-kp]-+- + L[-2-kp]---",
    "M[-1-kp]+++ = L[-1-kp]+++ + L[-1-kp]++- + L[-1-kp]+-+ + L[-1-kp]+-- + L[-kp]+o+ + L[-kp]+o- + L[1-kp]+++ + L[1-kp]++- + L[1-kp]+-+ + L[1-kp]+-- + L[-1-kp]-++ + L[-1-kp]-+- + L[-1-kp]--+ + L[-1-kp]--- + L[-2-kp]-++ + L[-2-kp]-+- + L[-2-kp]--+ + L[-2-kp]---",
};

const std::vector<std::string> d1_comp_zero = {
    "M[0]o-- = L[0]o-- + L[1]--o + L[-1]--- + L[2]---",
    "M[0]o-+ = L[0]o-+ + L[0]o-- + L[1]--o + L[-1]--+ + L[-1]--- + L[2]--+ + L[2]---",
    "M[0]o+- = L[0]o+- + L[0]o-- + L[1]-+o + L[1]--o + L[-1]-+- + L[-1]--- + L[2]-+- + L[2]---",
    "M[0]o++ = L[0]o++ + L[0]o+- + L[0]o-+ + L[0]o-- + L[1]-+o + L[1]--o + L[-1]-++ + L[-1]-+- + L[-1]--+ + L[-1]--- + L[2]-++ + L[2]-+- + L[2]--+ + L[2]---",
};

const std::vector<std::string> z1_comp_zero = {
    "M[0]o-- = L[0]o-- + L[1]--o + L[2]--- + L[-1]-o- + L[-2]---",
    "M[0]o-+ = L[0]o-+ + L[0]o-- + L[1]--o + L[-1]-o+ + L[-1]-o- + L[2]--+ + L[2]--- + L[-2]--+ + L[-2]---",
    "M[0]o+- = L[0]o+- + L[0]o-- + L[1]-+o + L[1]--o + L[-1]-o- + L[2]-+- + L[2]--- + L[-2]-+- + L[-2]---",
    "M[0]o++ = L[0]o++ + L[0]o+- + L[0]o-+ + L[0]o-- + L[1]-+o + L[1]--o + L[-1]-o+ + L[-1]-o- + L[2]-++ + L[2]-+- + L[2]--+ + L[2]--- + L[-2]-++ + L[-2]-+- + L[-2]--+ + L[-2]---",
};

}  // namespace d21::tables
