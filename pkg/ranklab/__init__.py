from ranklab.numeric import *
from ranklab.ranksum import *
from ranklab.mingap import *
from ranklab.reduction import *
from ranklab.oracle import *
