#pragma once

#include "bicross/quantum/core.hpp"
#include "bicross/quantum/bicocycle.hpp"
#include "bicross/quantum/cdcp.hpp"
#include "bicross/quantum/cdcc.hpp"
