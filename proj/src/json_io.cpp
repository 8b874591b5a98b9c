namespace coxcalc {}
