#pragma once

#include "ramsey_cert/cycle_extract.hpp"
#include "ramsey_cert/errors.hpp"
#include "ramsey_cert/extractor.hpp"
#include "ramsey_cert/graph.hpp"
#include "ramsey_cert/graph6.hpp"
#include "ramsey_cert/hamilton.hpp"
#include "ramsey_cert/io.hpp"
#include "ramsey_cert/matching.hpp"
#include "ramsey_cert/matching_case.hpp"
#include "ramsey_cert/oracle.hpp"
#include "ramsey_cert/path_ramsey.hpp"
#include "ramsey_cert/search.hpp"
#include "ramsey_cert/target.hpp"
#include "ramsey_cert/witness.hpp"
