#include "nad/acceptance.hpp"
#include <iostream>
int main(){return nad::acceptance::run_and_report(std::cout)?0:1;}
