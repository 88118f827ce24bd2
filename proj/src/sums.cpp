#include "kzeta/sums.hpp"
