#include "kzeta/series.hpp"
