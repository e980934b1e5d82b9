#pragma once

#include "paracon/bitvec.hpp"
#include "paracon/carrier.hpp"
#include "paracon/classify.hpp"
#include "paracon/consequence.hpp"
#include "paracon/formula.hpp"
#include "paracon/io.hpp"
#include "paracon/matrix.hpp"
#include "paracon/poset.hpp"
#include "paracon/quasineg.hpp"
#include "paracon/report.hpp"
#include "paracon/search.hpp"
#include "paracon/verdict.hpp"
#include "paracon/version.hpp"
