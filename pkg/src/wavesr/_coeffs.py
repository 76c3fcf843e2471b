"""Wavelet filter coefficient tables.

Generated by tools/gen_coeffs.py; do not edit by hand.
Each entry: (family, orthogonal, dec_lo, dec_hi, rec_lo, rec_hi, synthesis_shift, sym_anchor).
"""

COEFFS = {
    'bior2.6': (
        'bior', False,
        [-6.90533966002487842e-03, 1.38106793200497568e-02, 4.69563096881691761e-02, -1.07723298696388109e-01, -1.69871355636612015e-01, 4.47466009969612111e-01, 9.66747552403482979e-01, 4.47466009969612111e-01, -1.69871355636612015e-01, -1.07723298696388109e-01, 4.69563096881691761e-02, 1.38106793200497568e-02, -6.90533966002487842e-03],
        [3.53553390593273786e-01, -7.07106781186547573e-01, 3.53553390593273786e-01],
        [3.53553390593273786e-01, 7.07106781186547573e-01, 3.53553390593273786e-01],
        [6.90533966002487842e-03, 1.38106793200497568e-02, -4.69563096881691761e-02, -1.07723298696388109e-01, 1.69871355636612015e-01, 4.47466009969612111e-01, -9.66747552403482979e-01, 4.47466009969612111e-01, 1.69871355636612015e-01, -1.07723298696388109e-01, -4.69563096881691761e-02, 1.38106793200497568e-02, 6.90533966002487842e-03],
        7, (6, 0),
    ),
    'coif1': (
        'coif', True,
        [-1.56557281357919131e-02, -7.27326195125264502e-02, 3.84864846864857613e-01, 8.52572020211600390e-01, 3.37897662457481873e-01, -7.27326195125264502e-02],
        [-7.27326195125264502e-02, -3.37897662457481873e-01, 8.52572020211600390e-01, -3.84864846864857613e-01, -7.27326195125264502e-02, 1.56557281357919131e-02],
        [-7.27326195125264502e-02, 3.37897662457481873e-01, 8.52572020211600390e-01, 3.84864846864857613e-01, -7.27326195125264502e-02, -1.56557281357919131e-02],
        [1.56557281357919131e-02, -7.27326195125264502e-02, -3.84864846864857613e-01, 8.52572020211600390e-01, -3.37897662457481873e-01, -7.27326195125264502e-02],
        5, (2, 2),
    ),
    'coif2': (
        'coif', True,
        [-7.20549445520391320e-04, -1.82320887091277158e-03, 5.61143481937221959e-03, 2.36801719468528286e-02, -5.94344186464441301e-02, -7.64885990782834674e-02, 4.17005184423258457e-01, 8.12723635449408954e-01, 3.86110066822750009e-01, -6.73725547237196132e-02, -4.14649367868685087e-02, 1.63873364632017397e-02],
        [1.63873364632017397e-02, 4.14649367868685087e-02, -6.73725547237196132e-02, -3.86110066822750009e-01, 8.12723635449408954e-01, -4.17005184423258457e-01, -7.64885990782834674e-02, 5.94344186464441301e-02, 2.36801719468528286e-02, -5.61143481937221959e-03, -1.82320887091277158e-03, 7.20549445520391320e-04],
        [1.63873364632017397e-02, -4.14649367868685087e-02, -6.73725547237196132e-02, 3.86110066822750009e-01, 8.12723635449408954e-01, 4.17005184423258457e-01, -7.64885990782834674e-02, -5.94344186464441301e-02, 2.36801719468528286e-02, 5.61143481937221959e-03, -1.82320887091277158e-03, -7.20549445520391320e-04],
        [7.20549445520391320e-04, -1.82320887091277158e-03, -5.61143481937221959e-03, 2.36801719468528286e-02, 5.94344186464441301e-02, -7.64885990782834674e-02, -4.17005184423258457e-01, 8.12723635449408954e-01, -3.86110066822750009e-01, -6.73725547237196132e-02, 4.14649367868685087e-02, 1.63873364632017397e-02],
        11, (6, 4),
    ),
    'coif3': (
        'coif', True,
        [-3.45997731975968893e-05, -7.09833025065418916e-05, 4.66216959821224165e-04, 1.11751877083781964e-03, -2.57451768814741548e-03, -9.00797613676339835e-03, 1.58805448637340148e-02, 3.45550275733524301e-02, -8.23019271064694830e-02, -7.17998216191768901e-02, 4.28483476377604977e-01, 7.93777222626041778e-01, 4.05176902408936945e-01, -6.11233900029053354e-02, -6.57719112813952428e-02, 2.34526961420416374e-02, 7.78259642566018778e-03, -3.79351286437386217e-03],
        [-3.79351286437386217e-03, -7.78259642566018778e-03, 2.34526961420416374e-02, 6.57719112813952428e-02, -6.11233900029053354e-02, -4.05176902408936945e-01, 7.93777222626041778e-01, -4.28483476377604977e-01, -7.17998216191768901e-02, 8.23019271064694830e-02, 3.45550275733524301e-02, -1.58805448637340148e-02, -9.00797613676339835e-03, 2.57451768814741548e-03, 1.11751877083781964e-03, -4.66216959821224165e-04, -7.09833025065418916e-05, 3.45997731975968893e-05],
        [-3.79351286437386217e-03, 7.78259642566018778e-03, 2.34526961420416374e-02, -6.57719112813952428e-02, -6.11233900029053354e-02, 4.05176902408936945e-01, 7.93777222626041778e-01, 4.28483476377604977e-01, -7.17998216191768901e-02, -8.23019271064694830e-02, 3.45550275733524301e-02, 1.58805448637340148e-02, -9.00797613676339835e-03, -2.57451768814741548e-03, 1.11751877083781964e-03, 4.66216959821224165e-04, -7.09833025065418916e-05, -3.45997731975968893e-05],
        [3.45997731975968893e-05, -7.09833025065418916e-05, -4.66216959821224165e-04, 1.11751877083781964e-03, 2.57451768814741548e-03, -9.00797613676339835e-03, -1.58805448637340148e-02, 3.45550275733524301e-02, 8.23019271064694830e-02, -7.17998216191768901e-02, -4.28483476377604977e-01, 7.93777222626041778e-01, -4.05176902408936945e-01, -6.11233900029053354e-02, 6.57719112813952428e-02, 2.34526961420416374e-02, -7.78259642566018778e-03, -3.79351286437386217e-03],
        17, (10, 6),
    ),
    'coif4': (
        'coif', True,
        [-1.78499110247629803e-06, -3.25964857619092643e-06, 3.12298646771080199e-05, 6.23388588069741288e-05, -2.59974348368997334e-04, -5.89020267119985197e-04, 1.26656113479900099e-03, 3.75143491970476081e-03, -5.65828414956465447e-03, -1.52117287680402606e-02, 2.50822546047209695e-02, 3.93344233553456074e-02, -9.62204271990581839e-02, -6.66274726267101075e-02, 4.34386036580138357e-01, 7.82238933829802918e-01, 4.15308424140856391e-01, -5.60773186385712732e-02, -8.12667087845489050e-02, 2.66823040119086204e-02, 1.60689467050943446e-02, -7.34616771065608673e-03, -1.62949237109542931e-03, 8.92313870652559319e-04],
        [8.92313870652559319e-04, 1.62949237109542931e-03, -7.34616771065608673e-03, -1.60689467050943446e-02, 2.66823040119086204e-02, 8.12667087845489050e-02, -5.60773186385712732e-02, -4.15308424140856391e-01, 7.82238933829802918e-01, -4.34386036580138357e-01, -6.66274726267101075e-02, 9.62204271990581839e-02, 3.93344233553456074e-02, -2.50822546047209695e-02, -1.52117287680402606e-02, 5.65828414956465447e-03, 3.75143491970476081e-03, -1.26656113479900099e-03, -5.89020267119985197e-04, 2.59974348368997334e-04, 6.23388588069741288e-05, -3.12298646771080199e-05, -3.25964857619092643e-06, 1.78499110247629803e-06],
        [8.92313870652559319e-04, -1.62949237109542931e-03, -7.34616771065608673e-03, 1.60689467050943446e-02, 2.66823040119086204e-02, -8.12667087845489050e-02, -5.60773186385712732e-02, 4.15308424140856391e-01, 7.82238933829802918e-01, 4.34386036580138357e-01, -6.66274726267101075e-02, -9.62204271990581839e-02, 3.93344233553456074e-02, 2.50822546047209695e-02, -1.52117287680402606e-02, -5.65828414956465447e-03, 3.75143491970476081e-03, 1.26656113479900099e-03, -5.89020267119985197e-04, -2.59974348368997334e-04, 6.23388588069741288e-05, 3.12298646771080199e-05, -3.25964857619092643e-06, -1.78499110247629803e-06],
        [1.78499110247629803e-06, -3.25964857619092643e-06, -3.12298646771080199e-05, 6.23388588069741288e-05, 2.59974348368997334e-04, -5.89020267119985197e-04, -1.26656113479900099e-03, 3.75143491970476081e-03, 5.65828414956465447e-03, -1.52117287680402606e-02, -2.50822546047209695e-02, 3.93344233553456074e-02, 9.62204271990581839e-02, -6.66274726267101075e-02, -4.34386036580138357e-01, 7.82238933829802918e-01, -4.15308424140856391e-01, -5.60773186385712732e-02, 8.12667087845489050e-02, 2.66823040119086204e-02, -1.60689467050943446e-02, -7.34616771065608673e-03, 1.62949237109542931e-03, 8.92313870652559319e-04],
        23, (14, 8),
    ),
    'coif5': (
        'coif', True,
        [-9.61838222773618906e-08, -1.63020490998674758e-07, 2.06308196672069185e-06, 3.71069629858742097e-06, -2.12804804064901552e-05, -4.13008392525296284e-05, 1.40378353281978816e-04, 3.02371691608658915e-04, -6.37745573732633126e-04, -1.66409652621006044e-03, 2.43307644199490221e-03, 6.76955820729080275e-03, -9.16513768786727037e-03, -1.97752096301479358e-02, 3.26863594857416187e-02, 4.13087027822767600e-02, -1.05576768935631810e-01, -6.20494189801844911e-02, 4.37990302106380569e-01, 7.74285510544201250e-01, 4.21571770419327752e-01, -5.20250560811712920e-02, -9.19260493810585416e-02, 2.81500818351543731e-02, 2.34115800196094161e-02, -1.01217455522560739e-02, -4.16039190321038435e-03, 2.17560067657698083e-03, 3.58721423963451040e-04, -2.11764617157060022e-04],
        [-2.11764617157060022e-04, -3.58721423963451040e-04, 2.17560067657698083e-03, 4.16039190321038435e-03, -1.01217455522560739e-02, -2.34115800196094161e-02, 2.81500818351543731e-02, 9.19260493810585416e-02, -5.20250560811712920e-02, -4.21571770419327752e-01, 7.74285510544201250e-01, -4.37990302106380569e-01, -6.20494189801844911e-02, 1.05576768935631810e-01, 4.13087027822767600e-02, -3.26863594857416187e-02, -1.97752096301479358e-02, 9.16513768786727037e-03, 6.76955820729080275e-03, -2.43307644199490221e-03, -1.66409652621006044e-03, 6.37745573732633126e-04, 3.02371691608658915e-04, -1.40378353281978816e-04, -4.13008392525296284e-05, 2.12804804064901552e-05, 3.71069629858742097e-06, -2.06308196672069185e-06, -1.63020490998674758e-07, 9.61838222773618906e-08],
        [-2.11764617157060022e-04, 3.58721423963451040e-04, 2.17560067657698083e-03, -4.16039190321038435e-03, -1.01217455522560739e-02, 2.34115800196094161e-02, 2.81500818351543731e-02, -9.19260493810585416e-02, -5.20250560811712920e-02, 4.21571770419327752e-01, 7.74285510544201250e-01, 4.37990302106380569e-01, -6.20494189801844911e-02, -1.05576768935631810e-01, 4.13087027822767600e-02, 3.26863594857416187e-02, -1.97752096301479358e-02, -9.16513768786727037e-03, 6.76955820729080275e-03, 2.43307644199490221e-03, -1.66409652621006044e-03, -6.37745573732633126e-04, 3.02371691608658915e-04, 1.40378353281978816e-04, -4.13008392525296284e-05, -2.12804804064901552e-05, 3.71069629858742097e-06, 2.06308196672069185e-06, -1.63020490998674758e-07, -9.61838222773618906e-08],
        [9.61838222773618906e-08, -1.63020490998674758e-07, -2.06308196672069185e-06, 3.71069629858742097e-06, 2.12804804064901552e-05, -4.13008392525296284e-05, -1.40378353281978816e-04, 3.02371691608658915e-04, 6.37745573732633126e-04, -1.66409652621006044e-03, -2.43307644199490221e-03, 6.76955820729080275e-03, 9.16513768786727037e-03, -1.97752096301479358e-02, -3.26863594857416187e-02, 4.13087027822767600e-02, 1.05576768935631810e-01, -6.20494189801844911e-02, -4.37990302106380569e-01, 7.74285510544201250e-01, -4.21571770419327752e-01, -5.20250560811712920e-02, 9.19260493810585416e-02, 2.81500818351543731e-02, -2.34115800196094161e-02, -1.01217455522560739e-02, 4.16039190321038435e-03, 2.17560067657698083e-03, -3.58721423963451040e-04, -2.11764617157060022e-04],
        29, (18, 10),
    ),
    'db1': (
        'db', True,
        [7.07106781186547573e-01, 7.07106781186547573e-01],
        [7.07106781186547573e-01, -7.07106781186547573e-01],
        [7.07106781186547573e-01, 7.07106781186547573e-01],
        [-7.07106781186547573e-01, 7.07106781186547573e-01],
        1, (0, 0),
    ),
    'db10': (
        'db', True,
        [-1.32642028945212460e-05, 9.35886703200696055e-05, -1.16466855129285463e-04, -6.85856694959711727e-04, 1.99240529518505656e-03, 1.39535174705290128e-03, -1.07331754833305763e-02, 3.60655356695617057e-03, 3.32126740593410089e-02, -2.94575368218758203e-02, -7.13941471663970956e-02, 9.30573646035723762e-02, 1.27369340335793280e-01, -1.95946274377377078e-01, -2.49846424327315436e-01, 2.81172343660577528e-01, 6.88459039453603650e-01, 5.27201188931725628e-01, 1.88176800077691525e-01, 2.66700579005555577e-02],
        [2.66700579005555577e-02, -1.88176800077691525e-01, 5.27201188931725628e-01, -6.88459039453603650e-01, 2.81172343660577528e-01, 2.49846424327315436e-01, -1.95946274377377078e-01, -1.27369340335793280e-01, 9.30573646035723762e-02, 7.13941471663970956e-02, -2.94575368218758203e-02, -3.32126740593410089e-02, 3.60655356695617057e-03, 1.07331754833305763e-02, 1.39535174705290128e-03, -1.99240529518505656e-03, -6.85856694959711727e-04, 1.16466855129285463e-04, 9.35886703200696055e-05, 1.32642028945212460e-05],
        [2.66700579005555577e-02, 1.88176800077691525e-01, 5.27201188931725628e-01, 6.88459039453603650e-01, 2.81172343660577528e-01, -2.49846424327315436e-01, -1.95946274377377078e-01, 1.27369340335793280e-01, 9.30573646035723762e-02, -7.13941471663970956e-02, -2.94575368218758203e-02, 3.32126740593410089e-02, 3.60655356695617057e-03, -1.07331754833305763e-02, 1.39535174705290128e-03, 1.99240529518505656e-03, -6.85856694959711727e-04, -1.16466855129285463e-04, 9.35886703200696055e-05, -1.32642028945212460e-05],
        [1.32642028945212460e-05, 9.35886703200696055e-05, 1.16466855129285463e-04, -6.85856694959711727e-04, -1.99240529518505656e-03, 1.39535174705290128e-03, 1.07331754833305763e-02, 3.60655356695617057e-03, -3.32126740593410089e-02, -2.94575368218758203e-02, 7.13941471663970956e-02, 9.30573646035723762e-02, -1.27369340335793280e-01, -1.95946274377377078e-01, 2.49846424327315436e-01, 2.81172343660577528e-01, -6.88459039453603650e-01, 5.27201188931725628e-01, -1.88176800077691525e-01, 2.66700579005555577e-02],
        19, (16, 2),
    ),
    'db18': (
        'db', True,
        [-2.50793445494859872e-09, 3.06883586304517560e-08, -1.17609876702823185e-07, -7.69163268988517793e-08, 1.76871298362761593e-06, -3.33263447888582239e-06, -8.52060253744669764e-06, 3.74123788074003918e-05, -1.53591712353472491e-07, -1.98648552311747985e-04, 2.13581561910340754e-04, 6.28465682965145844e-04, -1.34059629833610679e-03, -1.11873266699249714e-03, 4.94334360546673946e-03, 1.18630033858117476e-04, -1.30514809466120048e-02, 6.26216795430570902e-03, 2.66707059264705941e-02, -2.37332103958600056e-02, -4.45261419029823330e-02, 5.70512477385368907e-02, 6.48872162119054491e-02, -1.06752246659828506e-01, -9.23318841508462967e-02, 1.67081312763257439e-01, 1.49533975565377814e-01, -2.16480934005143011e-01, -2.93654040736558763e-01, 1.47223111969928183e-01, 5.71801654888651423e-01, 5.71826807766607326e-01, 3.14678941337031726e-01, 1.03588465822423620e-01, 1.92885317241463829e-02, 1.57631021844076074e-03],
        [1.57631021844076074e-03, -1.92885317241463829e-02, 1.03588465822423620e-01, -3.14678941337031726e-01, 5.71826807766607326e-01, -5.71801654888651423e-01, 1.47223111969928183e-01, 2.93654040736558763e-01, -2.16480934005143011e-01, -1.49533975565377814e-01, 1.67081312763257439e-01, 9.23318841508462967e-02, -1.06752246659828506e-01, -6.48872162119054491e-02, 5.70512477385368907e-02, 4.45261419029823330e-02, -2.37332103958600056e-02, -2.66707059264705941e-02, 6.26216795430570902e-03, 1.30514809466120048e-02, 1.18630033858117476e-04, -4.94334360546673946e-03, -1.11873266699249714e-03, 1.34059629833610679e-03, 6.28465682965145844e-04, -2.13581561910340754e-04, -1.98648552311747985e-04, 1.53591712353472491e-07, 3.74123788074003918e-05, 8.52060253744669764e-06, -3.33263447888582239e-06, -1.76871298362761593e-06, -7.69163268988517793e-08, 1.17609876702823185e-07, 3.06883586304517560e-08, 2.50793445494859872e-09],
        [1.57631021844076074e-03, 1.92885317241463829e-02, 1.03588465822423620e-01, 3.14678941337031726e-01, 5.71826807766607326e-01, 5.71801654888651423e-01, 1.47223111969928183e-01, -2.93654040736558763e-01, -2.16480934005143011e-01, 1.49533975565377814e-01, 1.67081312763257439e-01, -9.23318841508462967e-02, -1.06752246659828506e-01, 6.48872162119054491e-02, 5.70512477385368907e-02, -4.45261419029823330e-02, -2.37332103958600056e-02, 2.66707059264705941e-02, 6.26216795430570902e-03, -1.30514809466120048e-02, 1.18630033858117476e-04, 4.94334360546673946e-03, -1.11873266699249714e-03, -1.34059629833610679e-03, 6.28465682965145844e-04, 2.13581561910340754e-04, -1.98648552311747985e-04, -1.53591712353472491e-07, 3.74123788074003918e-05, -8.52060253744669764e-06, -3.33263447888582239e-06, 1.76871298362761593e-06, -7.69163268988517793e-08, -1.17609876702823185e-07, 3.06883586304517560e-08, -2.50793445494859872e-09],
        [2.50793445494859872e-09, 3.06883586304517560e-08, 1.17609876702823185e-07, -7.69163268988517793e-08, -1.76871298362761593e-06, -3.33263447888582239e-06, 8.52060253744669764e-06, 3.74123788074003918e-05, 1.53591712353472491e-07, -1.98648552311747985e-04, -2.13581561910340754e-04, 6.28465682965145844e-04, 1.34059629833610679e-03, -1.11873266699249714e-03, -4.94334360546673946e-03, 1.18630033858117476e-04, 1.30514809466120048e-02, 6.26216795430570902e-03, -2.66707059264705941e-02, -2.37332103958600056e-02, 4.45261419029823330e-02, 5.70512477385368907e-02, -6.48872162119054491e-02, -1.06752246659828506e-01, 9.23318841508462967e-02, 1.67081312763257439e-01, -1.49533975565377814e-01, -2.16480934005143011e-01, 2.93654040736558763e-01, 1.47223111969928183e-01, -5.71801654888651423e-01, 5.71826807766607326e-01, -3.14678941337031726e-01, 1.03588465822423620e-01, -1.92885317241463829e-02, 1.57631021844076074e-03],
        35, (30, 4),
    ),
    'db19': (
        'db', True,
        [8.66684883899761996e-10, -1.11640206703582589e-08, 4.63693777578260454e-08, 1.44708829879784453e-08, -6.86275565776914270e-07, 1.53193147669119301e-06, 3.01096431629652611e-06, -1.66401762971549446e-05, 5.10595048707388623e-06, 8.71127046721992292e-05, -1.24600791734158777e-04, -2.60676135678627996e-04, 7.35802520505435330e-04, 3.41808653458595805e-04, -2.68755180070158212e-03, 7.68954359257548376e-04, 7.04074736710524288e-03, -5.86692228101217458e-03, -1.39883886785351422e-02, 1.93755498891761274e-02, 2.16237674095850450e-02, -4.56742262772309102e-02, -2.65012362501230413e-02, 8.69067555558122318e-02, 2.75843506256286709e-02, -1.42785695038736588e-01, -3.35185419023028772e-02, 2.12349743306278482e-01, 7.46522697081032638e-02, -2.85838631755826245e-01, -2.28091394215482635e-01, 2.60894952651038847e-01, 6.01704549127537902e-01, 5.24436377464654990e-01, 2.64388431740896823e-01, 8.12781132654595562e-02, 1.42810984507643988e-02, 1.10866976318171060e-03],
        [1.10866976318171060e-03, -1.42810984507643988e-02, 8.12781132654595562e-02, -2.64388431740896823e-01, 5.24436377464654990e-01, -6.01704549127537902e-01, 2.60894952651038847e-01, 2.28091394215482635e-01, -2.85838631755826245e-01, -7.46522697081032638e-02, 2.12349743306278482e-01, 3.35185419023028772e-02, -1.42785695038736588e-01, -2.75843506256286709e-02, 8.69067555558122318e-02, 2.65012362501230413e-02, -4.56742262772309102e-02, -2.16237674095850450e-02, 1.93755498891761274e-02, 1.39883886785351422e-02, -5.86692228101217458e-03, -7.04074736710524288e-03, 7.68954359257548376e-04, 2.68755180070158212e-03, 3.41808653458595805e-04, -7.35802520505435330e-04, -2.60676135678627996e-04, 1.24600791734158777e-04, 8.71127046721992292e-05, -5.10595048707388623e-06, -1.66401762971549446e-05, -3.01096431629652611e-06, 1.53193147669119301e-06, 6.86275565776914270e-07, 1.44708829879784453e-08, -4.63693777578260454e-08, -1.11640206703582589e-08, -8.66684883899761996e-10],
        [1.10866976318171060e-03, 1.42810984507643988e-02, 8.12781132654595562e-02, 2.64388431740896823e-01, 5.24436377464654990e-01, 6.01704549127537902e-01, 2.60894952651038847e-01, -2.28091394215482635e-01, -2.85838631755826245e-01, 7.46522697081032638e-02, 2.12349743306278482e-01, -3.35185419023028772e-02, -1.42785695038736588e-01, 2.75843506256286709e-02, 8.69067555558122318e-02, -2.65012362501230413e-02, -4.56742262772309102e-02, 2.16237674095850450e-02, 1.93755498891761274e-02, -1.39883886785351422e-02, -5.86692228101217458e-03, 7.04074736710524288e-03, 7.68954359257548376e-04, -2.68755180070158212e-03, 3.41808653458595805e-04, 7.35802520505435330e-04, -2.60676135678627996e-04, -1.24600791734158777e-04, 8.71127046721992292e-05, 5.10595048707388623e-06, -1.66401762971549446e-05, 3.01096431629652611e-06, 1.53193147669119301e-06, -6.86275565776914270e-07, 1.44708829879784453e-08, 4.63693777578260454e-08, -1.11640206703582589e-08, 8.66684883899761996e-10],
        [-8.66684883899761996e-10, -1.11640206703582589e-08, -4.63693777578260454e-08, 1.44708829879784453e-08, 6.86275565776914270e-07, 1.53193147669119301e-06, -3.01096431629652611e-06, -1.66401762971549446e-05, -5.10595048707388623e-06, 8.71127046721992292e-05, 1.24600791734158777e-04, -2.60676135678627996e-04, -7.35802520505435330e-04, 3.41808653458595805e-04, 2.68755180070158212e-03, 7.68954359257548376e-04, -7.04074736710524288e-03, -5.86692228101217458e-03, 1.39883886785351422e-02, 1.93755498891761274e-02, -2.16237674095850450e-02, -4.56742262772309102e-02, 2.65012362501230413e-02, 8.69067555558122318e-02, -2.75843506256286709e-02, -1.42785695038736588e-01, 3.35185419023028772e-02, 2.12349743306278482e-01, -7.46522697081032638e-02, -2.85838631755826245e-01, 2.28091394215482635e-01, 2.60894952651038847e-01, -6.01704549127537902e-01, 5.24436377464654990e-01, -2.64388431740896823e-01, 8.12781132654595562e-02, -1.42810984507643988e-02, 1.10866976318171060e-03],
        37, (32, 4),
    ),
    'db2': (
        'db', True,
        [-1.29409522551260370e-01, 2.24143868042013389e-01, 8.36516303737807831e-01, 4.82962913144534156e-01],
        [4.82962913144534156e-01, -8.36516303737807831e-01, 2.24143868042013389e-01, 1.29409522551260370e-01],
        [4.82962913144534156e-01, 8.36516303737807831e-01, 2.24143868042013389e-01, -1.29409522551260370e-01],
        [1.29409522551260370e-01, 2.24143868042013389e-01, -8.36516303737807831e-01, 4.82962913144534156e-01],
        3, (2, 0),
    ),
    'db20': (
        'db', True,
        [-2.99883648961932045e-10, 4.05612705555183364e-09, -1.81484324829969637e-08, 2.01432202355051317e-10, 2.63392422627000180e-07, -6.84707959700055846e-07, -1.01199401001888639e-06, 7.24124828767362132e-06, -4.37614386218399799e-06, -3.71058618339471352e-05, 6.77428082837773146e-05, 1.01532889736702923e-04, -3.85104748699217686e-04, -5.34975984399769619e-05, 1.39255961932313664e-03, -8.31562172822557146e-04, -3.58149425960962347e-03, 4.42054238704579164e-03, 6.72162730225945877e-03, -1.38105261371519236e-02, -8.78932492390156229e-03, 3.22942995307695865e-02, 5.87468181181182748e-03, -6.17228996246804718e-02, 5.63224685730743732e-03, 1.02291719174442575e-01, -2.47168273386135888e-02, -1.55458750707268001e-01, 3.98502464577712087e-02, 2.28291050819916352e-01, -1.67270883090770116e-02, -3.26786800434035074e-01, -1.39212088011483909e-01, 3.61502298739331152e-01, 6.10493238938593974e-01, 4.72696185310901795e-01, 2.19942113551397089e-01, 6.34237804590815218e-02, 1.05493946249504006e-02, 7.79953613666846510e-04],
        [7.79953613666846510e-04, -1.05493946249504006e-02, 6.34237804590815218e-02, -2.19942113551397089e-01, 4.72696185310901795e-01, -6.10493238938593974e-01, 3.61502298739331152e-01, 1.39212088011483909e-01, -3.26786800434035074e-01, 1.67270883090770116e-02, 2.28291050819916352e-01, -3.98502464577712087e-02, -1.55458750707268001e-01, 2.47168273386135888e-02, 1.02291719174442575e-01, -5.63224685730743732e-03, -6.17228996246804718e-02, -5.87468181181182748e-03, 3.22942995307695865e-02, 8.78932492390156229e-03, -1.38105261371519236e-02, -6.72162730225945877e-03, 4.42054238704579164e-03, 3.58149425960962347e-03, -8.31562172822557146e-04, -1.39255961932313664e-03, -5.34975984399769619e-05, 3.85104748699217686e-04, 1.01532889736702923e-04, -6.77428082837773146e-05, -3.71058618339471352e-05, 4.37614386218399799e-06, 7.24124828767362132e-06, 1.01199401001888639e-06, -6.84707959700055846e-07, -2.63392422627000180e-07, 2.01432202355051317e-10, 1.81484324829969637e-08, 4.05612705555183364e-09, 2.99883648961932045e-10],
        [7.79953613666846510e-04, 1.05493946249504006e-02, 6.34237804590815218e-02, 2.19942113551397089e-01, 4.72696185310901795e-01, 6.10493238938593974e-01, 3.61502298739331152e-01, -1.39212088011483909e-01, -3.26786800434035074e-01, -1.67270883090770116e-02, 2.28291050819916352e-01, 3.98502464577712087e-02, -1.55458750707268001e-01, -2.47168273386135888e-02, 1.02291719174442575e-01, 5.63224685730743732e-03, -6.17228996246804718e-02, 5.87468181181182748e-03, 3.22942995307695865e-02, -8.78932492390156229e-03, -1.38105261371519236e-02, 6.72162730225945877e-03, 4.42054238704579164e-03, -3.58149425960962347e-03, -8.31562172822557146e-04, 1.39255961932313664e-03, -5.34975984399769619e-05, -3.85104748699217686e-04, 1.01532889736702923e-04, 6.77428082837773146e-05, -3.71058618339471352e-05, -4.37614386218399799e-06, 7.24124828767362132e-06, -1.01199401001888639e-06, -6.84707959700055846e-07, 2.63392422627000180e-07, 2.01432202355051317e-10, -1.81484324829969637e-08, 4.05612705555183364e-09, -2.99883648961932045e-10],
        [2.99883648961932045e-10, 4.05612705555183364e-09, 1.81484324829969637e-08, 2.01432202355051317e-10, -2.63392422627000180e-07, -6.84707959700055846e-07, 1.01199401001888639e-06, 7.24124828767362132e-06, 4.37614386218399799e-06, -3.71058618339471352e-05, -6.77428082837773146e-05, 1.01532889736702923e-04, 3.85104748699217686e-04, -5.34975984399769619e-05, -1.39255961932313664e-03, -8.31562172822557146e-04, 3.58149425960962347e-03, 4.42054238704579164e-03, -6.72162730225945877e-03, -1.38105261371519236e-02, 8.78932492390156229e-03, 3.22942995307695865e-02, -5.87468181181182748e-03, -6.17228996246804718e-02, -5.63224685730743732e-03, 1.02291719174442575e-01, 2.47168273386135888e-02, -1.55458750707268001e-01, -3.98502464577712087e-02, 2.28291050819916352e-01, 1.67270883090770116e-02, -3.26786800434035074e-01, 1.39212088011483909e-01, 3.61502298739331152e-01, -6.10493238938593974e-01, 4.72696185310901795e-01, -2.19942113551397089e-01, 6.34237804590815218e-02, -1.05493946249504006e-02, 7.79953613666846510e-04],
        39, (33, 5),
    ),
    'db3': (
        'db', True,
        [3.52262918857095333e-02, -8.54412738820266582e-02, -1.35011020010254584e-01, 4.59877502118491543e-01, 8.06891509311092436e-01, 3.32670552950082576e-01],
        [3.32670552950082576e-01, -8.06891509311092436e-01, 4.59877502118491543e-01, 1.35011020010254584e-01, -8.54412738820266582e-02, -3.52262918857095333e-02],
        [3.32670552950082576e-01, 8.06891509311092436e-01, 4.59877502118491543e-01, -1.35011020010254584e-01, -8.54412738820266582e-02, 3.52262918857095333e-02],
        [-3.52262918857095333e-02, -8.54412738820266582e-02, 1.35011020010254584e-01, 4.59877502118491543e-01, -8.06891509311092436e-01, 3.32670552950082576e-01],
        5, (3, 1),
    ),
    'db4': (
        'db', True,
        [-1.05974017850690334e-02, 3.28830116668852035e-02, 3.08413818355607675e-02, -1.87034811719093114e-01, -2.79837694168598577e-02, 6.30880767929859032e-01, 7.14846570552915783e-01, 2.30377813308896534e-01],
        [2.30377813308896534e-01, -7.14846570552915783e-01, 6.30880767929859032e-01, 2.79837694168598577e-02, -1.87034811719093114e-01, -3.08413818355607675e-02, 3.28830116668852035e-02, 1.05974017850690334e-02],
        [2.30377813308896534e-01, 7.14846570552915783e-01, 6.30880767929859032e-01, -2.79837694168598577e-02, -1.87034811719093114e-01, 3.08413818355607675e-02, 3.28830116668852035e-02, -1.05974017850690334e-02],
        [1.05974017850690334e-02, 3.28830116668852035e-02, -3.08413818355607675e-02, -1.87034811719093114e-01, 2.79837694168598577e-02, 6.30880767929859032e-01, -7.14846570552915783e-01, 2.30377813308896534e-01],
        7, (5, 1),
    ),
    'db5': (
        'db', True,
        [3.33572528547377168e-03, -1.25807519990820006e-02, -6.24149021279827524e-03, 7.75714938400457188e-02, -3.22448695846383818e-02, -2.42294887066382053e-01, 1.38428145901320743e-01, 7.24308528437772936e-01, 6.03829269797189760e-01, 1.60102397974192928e-01],
        [1.60102397974192928e-01, -6.03829269797189760e-01, 7.24308528437772936e-01, -1.38428145901320743e-01, -2.42294887066382053e-01, 3.22448695846383818e-02, 7.75714938400457188e-02, 6.24149021279827524e-03, -1.25807519990820006e-02, -3.33572528547377168e-03],
        [1.60102397974192928e-01, 6.03829269797189760e-01, 7.24308528437772936e-01, 1.38428145901320743e-01, -2.42294887066382053e-01, -3.22448695846383818e-02, 7.75714938400457188e-02, -6.24149021279827524e-03, -1.25807519990820006e-02, 3.33572528547377168e-03],
        [-3.33572528547377168e-03, -1.25807519990820006e-02, 6.24149021279827524e-03, 7.75714938400457188e-02, 3.22448695846383818e-02, -2.42294887066382053e-01, -1.38428145901320743e-01, 7.24308528437772936e-01, -6.03829269797189760e-01, 1.60102397974192928e-01],
        9, (7, 1),
    ),
    'db6': (
        'db', True,
        [-1.07730108530847981e-03, 4.77725751094551163e-03, 5.53842201161496234e-04, -3.15820393174860367e-02, 2.75228655303057304e-02, 9.75016055873230703e-02, -1.29766867567261940e-01, -2.26264693965439856e-01, 3.15250351709197685e-01, 7.51133908021095476e-01, 4.94623890398453170e-01, 1.11540743350109481e-01],
        [1.11540743350109481e-01, -4.94623890398453170e-01, 7.51133908021095476e-01, -3.15250351709197685e-01, -2.26264693965439856e-01, 1.29766867567261940e-01, 9.75016055873230703e-02, -2.75228655303057304e-02, -3.15820393174860367e-02, -5.53842201161496234e-04, 4.77725751094551163e-03, 1.07730108530847981e-03],
        [1.11540743350109481e-01, 4.94623890398453170e-01, 7.51133908021095476e-01, 3.15250351709197685e-01, -2.26264693965439856e-01, -1.29766867567261940e-01, 9.75016055873230703e-02, 2.75228655303057304e-02, -3.15820393174860367e-02, 5.53842201161496234e-04, 4.77725751094551163e-03, -1.07730108530847981e-03],
        [1.07730108530847981e-03, 4.77725751094551163e-03, -5.53842201161496234e-04, -3.15820393174860367e-02, -2.75228655303057304e-02, 9.75016055873230703e-02, 1.29766867567261940e-01, -2.26264693965439856e-01, -3.15250351709197685e-01, 7.51133908021095476e-01, -4.94623890398453170e-01, 1.11540743350109481e-01],
        11, (9, 1),
    ),
    'db7': (
        'db', True,
        [3.53713799974520295e-04, -1.80164070404749150e-03, 4.29577972921366623e-04, 1.25509985560998422e-02, -1.65745416306668850e-02, -3.80299369350144204e-02, 8.06126091510830783e-02, 7.13092192668302871e-02, -2.24036184993875037e-01, -1.43906003928565007e-01, 4.69782287405193233e-01, 7.29132090846235315e-01, 3.96539319481917452e-01, 7.78520540850091980e-02],
        [7.78520540850091980e-02, -3.96539319481917452e-01, 7.29132090846235315e-01, -4.69782287405193233e-01, -1.43906003928565007e-01, 2.24036184993875037e-01, 7.13092192668302871e-02, -8.06126091510830783e-02, -3.80299369350144204e-02, 1.65745416306668850e-02, 1.25509985560998422e-02, -4.29577972921366623e-04, -1.80164070404749150e-03, -3.53713799974520295e-04],
        [7.78520540850091980e-02, 3.96539319481917452e-01, 7.29132090846235315e-01, 4.69782287405193233e-01, -1.43906003928565007e-01, -2.24036184993875037e-01, 7.13092192668302871e-02, 8.06126091510830783e-02, -3.80299369350144204e-02, -1.65745416306668850e-02, 1.25509985560998422e-02, 4.29577972921366623e-04, -1.80164070404749150e-03, 3.53713799974520295e-04],
        [-3.53713799974520295e-04, -1.80164070404749150e-03, -4.29577972921366623e-04, 1.25509985560998422e-02, 1.65745416306668850e-02, -3.80299369350144204e-02, -8.06126091510830783e-02, 7.13092192668302871e-02, 2.24036184993875037e-01, -1.43906003928565007e-01, -4.69782287405193233e-01, 7.29132090846235315e-01, -3.96539319481917452e-01, 7.78520540850091980e-02],
        13, (10, 2),
    ),
    'db8': (
        'db', True,
        [-1.17476784124769548e-04, 6.75449406450569440e-04, -3.91740373376947104e-04, -4.87035299345157414e-03, 8.74609404740577662e-03, 1.39810279173982841e-02, -4.40882539307947546e-02, -1.73693010018075474e-02, 1.28747426620478472e-01, 4.72484573913282795e-04, -2.84015542961546963e-01, -1.58291052563493059e-02, 5.85354683654206731e-01, 6.75630736297289869e-01, 3.12871590914300002e-01, 5.44158422431040151e-02],
        [5.44158422431040151e-02, -3.12871590914300002e-01, 6.75630736297289869e-01, -5.85354683654206731e-01, -1.58291052563493059e-02, 2.84015542961546963e-01, 4.72484573913282795e-04, -1.28747426620478472e-01, -1.73693010018075474e-02, 4.40882539307947546e-02, 1.39810279173982841e-02, -8.74609404740577662e-03, -4.87035299345157414e-03, 3.91740373376947104e-04, 6.75449406450569440e-04, 1.17476784124769548e-04],
        [5.44158422431040151e-02, 3.12871590914300002e-01, 6.75630736297289869e-01, 5.85354683654206731e-01, -1.58291052563493059e-02, -2.84015542961546963e-01, 4.72484573913282795e-04, 1.28747426620478472e-01, -1.73693010018075474e-02, -4.40882539307947546e-02, 1.39810279173982841e-02, 8.74609404740577662e-03, -4.87035299345157414e-03, -3.91740373376947104e-04, 6.75449406450569440e-04, -1.17476784124769548e-04],
        [1.17476784124769548e-04, 6.75449406450569440e-04, 3.91740373376947104e-04, -4.87035299345157414e-03, -8.74609404740577662e-03, 1.39810279173982841e-02, 4.40882539307947546e-02, -1.73693010018075474e-02, -1.28747426620478472e-01, 4.72484573913282795e-04, 2.84015542961546963e-01, -1.58291052563493059e-02, -5.85354683654206731e-01, 6.75630736297289869e-01, -3.12871590914300002e-01, 5.44158422431040151e-02],
        15, (12, 2),
    ),
    'rbio2.6': (
        'rbio', False,
        [3.53553390593273786e-01, 7.07106781186547573e-01, 3.53553390593273786e-01],
        [-6.90533966002487842e-03, -1.38106793200497568e-02, 4.69563096881691761e-02, 1.07723298696388109e-01, -1.69871355636612015e-01, -4.47466009969612111e-01, 9.66747552403482979e-01, -4.47466009969612111e-01, -1.69871355636612015e-01, 1.07723298696388109e-01, 4.69563096881691761e-02, -1.38106793200497568e-02, -6.90533966002487842e-03],
        [-6.90533966002487842e-03, 1.38106793200497568e-02, 4.69563096881691761e-02, -1.07723298696388109e-01, -1.69871355636612015e-01, 4.47466009969612111e-01, 9.66747552403482979e-01, 4.47466009969612111e-01, -1.69871355636612015e-01, -1.07723298696388109e-01, 4.69563096881691761e-02, 1.38106793200497568e-02, -6.90533966002487842e-03],
        [-3.53553390593273786e-01, 7.07106781186547573e-01, -3.53553390593273786e-01],
        7, (1, 5),
    ),
    'rbio2.8': (
        'rbio', False,
        [3.53553390593273786e-01, 7.07106781186547573e-01, 3.53553390593273786e-01],
        [1.51054305063044216e-03, 3.02108610126088431e-03, -1.29475118625466470e-02, -2.89161098263541784e-02, 5.29984818906909447e-02, 1.34913073607736078e-01, -1.63829183434090253e-01, -4.62571440475916584e-01, 9.51642121897178561e-01, -4.62571440475916584e-01, -1.63829183434090253e-01, 1.34913073607736078e-01, 5.29984818906909447e-02, -2.89161098263541784e-02, -1.29475118625466470e-02, 3.02108610126088431e-03, 1.51054305063044216e-03],
        [1.51054305063044216e-03, -3.02108610126088431e-03, -1.29475118625466470e-02, 2.89161098263541784e-02, 5.29984818906909447e-02, -1.34913073607736078e-01, -1.63829183434090253e-01, 4.62571440475916584e-01, 9.51642121897178561e-01, 4.62571440475916584e-01, -1.63829183434090253e-01, -1.34913073607736078e-01, 5.29984818906909447e-02, 2.89161098263541784e-02, -1.29475118625466470e-02, -3.02108610126088431e-03, 1.51054305063044216e-03],
        [-3.53553390593273786e-01, 7.07106781186547573e-01, -3.53553390593273786e-01],
        9, (0, 8),
    ),
    'rbio3.1': (
        'rbio', False,
        [1.76776695296636893e-01, 5.30330085889910707e-01, 5.30330085889910707e-01, 1.76776695296636893e-01],
        [-3.53553390593273786e-01, -1.06066017177982141e+00, 1.06066017177982141e+00, 3.53553390593273786e-01],
        [-3.53553390593273786e-01, 1.06066017177982141e+00, 1.06066017177982141e+00, -3.53553390593273786e-01],
        [-1.76776695296636893e-01, 5.30330085889910707e-01, -5.30330085889910707e-01, 1.76776695296636893e-01],
        3, (1, 1),
    ),
    'rbio3.3': (
        'rbio', False,
        [1.76776695296636893e-01, 5.30330085889910707e-01, 5.30330085889910707e-01, 1.76776695296636893e-01],
        [6.62912607362388384e-02, 1.98873782208716515e-01, -1.54679608384557271e-01, -9.94368911043582493e-01, 9.94368911043582493e-01, 1.54679608384557271e-01, -1.98873782208716515e-01, -6.62912607362388384e-02],
        [6.62912607362388384e-02, -1.98873782208716515e-01, -1.54679608384557271e-01, 9.94368911043582493e-01, 9.94368911043582493e-01, -1.54679608384557271e-01, -1.98873782208716515e-01, 6.62912607362388384e-02],
        [-1.76776695296636893e-01, 5.30330085889910707e-01, -5.30330085889910707e-01, 1.76776695296636893e-01],
        5, (1, 3),
    ),
    'rbio3.5': (
        'rbio', False,
        [1.76776695296636893e-01, 5.30330085889910707e-01, 5.30330085889910707e-01, 1.76776695296636893e-01],
        [-1.38106793200497568e-02, -4.14320379601492705e-02, 5.24805814161890746e-02, 2.67927178808965272e-01, -7.18155324642587439e-02, -9.66747552403482979e-01, 9.66747552403482979e-01, 7.18155324642587439e-02, -2.67927178808965272e-01, -5.24805814161890746e-02, 4.14320379601492705e-02, 1.38106793200497568e-02],
        [-1.38106793200497568e-02, 4.14320379601492705e-02, 5.24805814161890746e-02, -2.67927178808965272e-01, -7.18155324642587439e-02, 9.66747552403482979e-01, 9.66747552403482979e-01, -7.18155324642587439e-02, -2.67927178808965272e-01, 5.24805814161890746e-02, 4.14320379601492705e-02, -1.38106793200497568e-02],
        [-1.76776695296636893e-01, 5.30330085889910707e-01, -5.30330085889910707e-01, 1.76776695296636893e-01],
        7, (1, 5),
    ),
    'sym12': (
        'sym', True,
        [-1.79066586975084474e-04, -1.81580788626329577e-05, 2.35029761418334730e-03, 3.07647796310524550e-04, -1.45898364492335324e-02, -2.60439103133141897e-03, 5.78041794455047483e-02, 1.53017406224801537e-02, -1.70370697238849622e-01, -7.83326223163154228e-02, 4.62741031219286447e-01, 7.63479097783640537e-01, 3.98885972390192023e-01, -2.21623061703513022e-02, -3.58488307369546344e-02, 4.91793182996611913e-02, 7.55378061167931523e-03, -2.42207226750133994e-02, -1.40890924432912905e-03, 7.41496551765431517e-03, 1.80214090085217517e-04, -1.34975575557157905e-03, -1.13539280415266116e-05, 1.11967194246565278e-04],
        [1.11967194246565278e-04, 1.13539280415266116e-05, -1.34975575557157905e-03, -1.80214090085217517e-04, 7.41496551765431517e-03, 1.40890924432912905e-03, -2.42207226750133994e-02, -7.55378061167931523e-03, 4.91793182996611913e-02, 3.58488307369546344e-02, -2.21623061703513022e-02, -3.98885972390192023e-01, 7.63479097783640537e-01, -4.62741031219286447e-01, -7.83326223163154228e-02, 1.70370697238849622e-01, 1.53017406224801537e-02, -5.78041794455047483e-02, -2.60439103133141897e-03, 1.45898364492335324e-02, 3.07647796310524550e-04, -2.35029761418334730e-03, -1.81580788626329577e-05, 1.79066586975084474e-04],
        [1.11967194246565278e-04, -1.13539280415266116e-05, -1.34975575557157905e-03, 1.80214090085217517e-04, 7.41496551765431517e-03, -1.40890924432912905e-03, -2.42207226750133994e-02, 7.55378061167931523e-03, 4.91793182996611913e-02, -3.58488307369546344e-02, -2.21623061703513022e-02, 3.98885972390192023e-01, 7.63479097783640537e-01, 4.62741031219286447e-01, -7.83326223163154228e-02, -1.70370697238849622e-01, 1.53017406224801537e-02, 5.78041794455047483e-02, -2.60439103133141897e-03, -1.45898364492335324e-02, 3.07647796310524550e-04, 2.35029761418334730e-03, -1.81580788626329577e-05, -1.79066586975084474e-04],
        [1.79066586975084474e-04, -1.81580788626329577e-05, -2.35029761418334730e-03, 3.07647796310524550e-04, 1.45898364492335324e-02, -2.60439103133141897e-03, -5.78041794455047483e-02, 1.53017406224801537e-02, 1.70370697238849622e-01, -7.83326223163154228e-02, -4.62741031219286447e-01, 7.63479097783640537e-01, -3.98885972390192023e-01, -2.21623061703513022e-02, 3.58488307369546344e-02, 4.91793182996611913e-02, -7.55378061167931523e-03, -2.42207226750133994e-02, 1.40890924432912905e-03, 7.41496551765431517e-03, -1.80214090085217517e-04, -1.34975575557157905e-03, 1.13539280415266116e-05, 1.11967194246565278e-04],
        23, (10, 12),
    ),
    'sym13': (
        'sym', True,
        [6.44529737832140025e-05, -4.65601131056225266e-07, -7.97020770789273942e-04, 3.53246430786648147e-04, 5.39809988759676514e-03, -2.90129351735815945e-03, -2.37957727093596264e-02, 1.38369947302419433e-02, 8.68637599557113838e-02, -7.77702959300058221e-03, -1.74447943638853270e-01, 6.91858904148625192e-02, 6.22281693442916728e-01, 7.09367435347872499e-01, 2.37433003472277276e-01, -8.41305687211482689e-02, -3.53386376431114868e-02, 2.36515953819966332e-02, -1.44851053982272514e-02, -2.01721554303160751e-02, 4.33949199336008951e-03, 6.72220831670009185e-03, -4.09778760174118442e-04, -1.10360449189636609e-03, 5.38381416959060819e-07, 7.45279189376402151e-05],
        [7.45279189376402151e-05, -5.38381416959060819e-07, -1.10360449189636609e-03, 4.09778760174118442e-04, 6.72220831670009185e-03, -4.33949199336008951e-03, -2.01721554303160751e-02, 1.44851053982272514e-02, 2.36515953819966332e-02, 3.53386376431114868e-02, -8.41305687211482689e-02, -2.37433003472277276e-01, 7.09367435347872499e-01, -6.22281693442916728e-01, 6.91858904148625192e-02, 1.74447943638853270e-01, -7.77702959300058221e-03, -8.68637599557113838e-02, 1.38369947302419433e-02, 2.37957727093596264e-02, -2.90129351735815945e-03, -5.39809988759676514e-03, 3.53246430786648147e-04, 7.97020770789273942e-04, -4.65601131056225266e-07, -6.44529737832140025e-05],
        [7.45279189376402151e-05, 5.38381416959060819e-07, -1.10360449189636609e-03, -4.09778760174118442e-04, 6.72220831670009185e-03, 4.33949199336008951e-03, -2.01721554303160751e-02, -1.44851053982272514e-02, 2.36515953819966332e-02, -3.53386376431114868e-02, -8.41305687211482689e-02, 2.37433003472277276e-01, 7.09367435347872499e-01, 6.22281693442916728e-01, 6.91858904148625192e-02, -1.74447943638853270e-01, -7.77702959300058221e-03, 8.68637599557113838e-02, 1.38369947302419433e-02, -2.37957727093596264e-02, -2.90129351735815945e-03, 5.39809988759676514e-03, 3.53246430786648147e-04, -7.97020770789273942e-04, -4.65601131056225266e-07, 6.44529737832140025e-05],
        [-6.44529737832140025e-05, -4.65601131056225266e-07, 7.97020770789273942e-04, 3.53246430786648147e-04, -5.39809988759676514e-03, -2.90129351735815945e-03, 2.37957727093596264e-02, 1.38369947302419433e-02, -8.68637599557113838e-02, -7.77702959300058221e-03, 1.74447943638853270e-01, 6.91858904148625192e-02, -6.22281693442916728e-01, 7.09367435347872499e-01, -2.37433003472277276e-01, -8.41305687211482689e-02, 3.53386376431114868e-02, 2.36515953819966332e-02, 1.44851053982272514e-02, -2.01721554303160751e-02, -4.33949199336008951e-03, 6.72220831670009185e-03, 4.09778760174118442e-04, -1.10360449189636609e-03, -5.38381416959060819e-07, 7.45279189376402151e-05],
        25, (12, 12),
    ),
    'sym14': (
        'sym', True,
        [-2.02807217826951109e-05, 3.50658449192927852e-05, 3.66333403567645655e-04, -3.92712687285587034e-04, -3.03402168631186804e-03, 1.15221010611880133e-03, 1.32289611536393955e-02, 1.72586358967869325e-03, -2.52705383001476692e-02, 3.22930871076009506e-03, 1.28429750122765803e-02, -1.34157250125165162e-01, -1.61193622279844989e-01, 2.80404922329611006e-01, 7.38278458393735515e-01, 5.58242875993193555e-01, 6.36575860608725730e-02, -7.32090691126538462e-02, 6.07381223833457010e-02, 7.97409507823496622e-02, 4.54485739061469534e-03, -1.37472703638467537e-02, 2.99192154364313770e-03, 4.48654819697737357e-03, -1.22414456495968058e-04, -4.61597850483195756e-04, 9.84432894353896561e-05, 5.69357723735901440e-05],
        [5.69357723735901440e-05, -9.84432894353896561e-05, -4.61597850483195756e-04, 1.22414456495968058e-04, 4.48654819697737357e-03, -2.99192154364313770e-03, -1.37472703638467537e-02, -4.54485739061469534e-03, 7.97409507823496622e-02, -6.07381223833457010e-02, -7.32090691126538462e-02, -6.36575860608725730e-02, 5.58242875993193555e-01, -7.38278458393735515e-01, 2.80404922329611006e-01, 1.61193622279844989e-01, -1.34157250125165162e-01, -1.28429750122765803e-02, 3.22930871076009506e-03, 2.52705383001476692e-02, 1.72586358967869325e-03, -1.32289611536393955e-02, 1.15221010611880133e-03, 3.03402168631186804e-03, -3.92712687285587034e-04, -3.66333403567645655e-04, 3.50658449192927852e-05, 2.02807217826951109e-05],
        [5.69357723735901440e-05, 9.84432894353896561e-05, -4.61597850483195756e-04, -1.22414456495968058e-04, 4.48654819697737357e-03, 2.99192154364313770e-03, -1.37472703638467537e-02, 4.54485739061469534e-03, 7.97409507823496622e-02, 6.07381223833457010e-02, -7.32090691126538462e-02, 6.36575860608725730e-02, 5.58242875993193555e-01, 7.38278458393735515e-01, 2.80404922329611006e-01, -1.61193622279844989e-01, -1.34157250125165162e-01, 1.28429750122765803e-02, 3.22930871076009506e-03, -2.52705383001476692e-02, 1.72586358967869325e-03, 1.32289611536393955e-02, 1.15221010611880133e-03, -3.03402168631186804e-03, -3.92712687285587034e-04, 3.66333403567645655e-04, 3.50658449192927852e-05, -2.02807217826951109e-05],
        [2.02807217826951109e-05, 3.50658449192927852e-05, -3.66333403567645655e-04, -3.92712687285587034e-04, 3.03402168631186804e-03, 1.15221010611880133e-03, -1.32289611536393955e-02, 1.72586358967869325e-03, 2.52705383001476692e-02, 3.22930871076009506e-03, -1.28429750122765803e-02, -1.34157250125165162e-01, 1.61193622279844989e-01, 2.80404922329611006e-01, -7.38278458393735515e-01, 5.58242875993193555e-01, -6.36575860608725730e-02, -7.32090691126538462e-02, -6.07381223833457010e-02, 7.97409507823496622e-02, -4.54485739061469534e-03, -1.37472703638467537e-02, -2.99192154364313770e-03, 4.48654819697737357e-03, 1.22414456495968058e-04, -4.61597850483195756e-04, -9.84432894353896561e-05, 5.69357723735901440e-05],
        27, (14, 12),
    ),
    'sym15': (
        'sym', True,
        [7.86156309742210246e-06, -1.24744156617149571e-05, -1.34027540646911459e-04, 1.64577692664542890e-04, 1.02211506174084625e-03, -1.01898248883520678e-03, -4.53730510991623166e-03, 4.44501879923595803e-03, 1.39994843154853214e-02, -1.36546289490717988e-02, -3.06638922150530638e-02, 2.70667036426952522e-02, 1.41862606880232521e-02, -1.32084720331082484e-01, -2.18793527080550707e-02, 4.93035815111093234e-01, 7.59060299421943530e-01, 3.76058713379227194e-01, -7.31957684438688944e-02, -8.76985552341979363e-02, 5.66499163848080550e-02, 5.04820576736577653e-02, -1.06023537956751162e-02, -1.25178544424649606e-02, 3.57147666086063712e-03, 3.21579748226264893e-03, -4.34117628182347697e-04, -4.10095064337810981e-04, 5.61845319865149692e-05, 3.54083313631056392e-05],
        [3.54083313631056392e-05, -5.61845319865149692e-05, -4.10095064337810981e-04, 4.34117628182347697e-04, 3.21579748226264893e-03, -3.57147666086063712e-03, -1.25178544424649606e-02, 1.06023537956751162e-02, 5.04820576736577653e-02, -5.66499163848080550e-02, -8.76985552341979363e-02, 7.31957684438688944e-02, 3.76058713379227194e-01, -7.59060299421943530e-01, 4.93035815111093234e-01, 2.18793527080550707e-02, -1.32084720331082484e-01, -1.41862606880232521e-02, 2.70667036426952522e-02, 3.06638922150530638e-02, -1.36546289490717988e-02, -1.39994843154853214e-02, 4.44501879923595803e-03, 4.53730510991623166e-03, -1.01898248883520678e-03, -1.02211506174084625e-03, 1.64577692664542890e-04, 1.34027540646911459e-04, -1.24744156617149571e-05, -7.86156309742210246e-06],
        [3.54083313631056392e-05, 5.61845319865149692e-05, -4.10095064337810981e-04, -4.34117628182347697e-04, 3.21579748226264893e-03, 3.57147666086063712e-03, -1.25178544424649606e-02, -1.06023537956751162e-02, 5.04820576736577653e-02, 5.66499163848080550e-02, -8.76985552341979363e-02, -7.31957684438688944e-02, 3.76058713379227194e-01, 7.59060299421943530e-01, 4.93035815111093234e-01, -2.18793527080550707e-02, -1.32084720331082484e-01, 1.41862606880232521e-02, 2.70667036426952522e-02, -3.06638922150530638e-02, -1.36546289490717988e-02, 1.39994843154853214e-02, 4.44501879923595803e-03, -4.53730510991623166e-03, -1.01898248883520678e-03, 1.02211506174084625e-03, 1.64577692664542890e-04, -1.34027540646911459e-04, -1.24744156617149571e-05, 7.86156309742210246e-06],
        [-7.86156309742210246e-06, -1.24744156617149571e-05, 1.34027540646911459e-04, 1.64577692664542890e-04, -1.02211506174084625e-03, -1.01898248883520678e-03, 4.53730510991623166e-03, 4.44501879923595803e-03, -1.39994843154853214e-02, -1.36546289490717988e-02, 3.06638922150530638e-02, 2.70667036426952522e-02, -1.41862606880232521e-02, -1.32084720331082484e-01, 2.18793527080550707e-02, 4.93035815111093234e-01, -7.59060299421943530e-01, 3.76058713379227194e-01, 7.31957684438688944e-02, -8.76985552341979363e-02, -5.66499163848080550e-02, 5.04820576736577653e-02, 1.06023537956751162e-02, -1.25178544424649606e-02, -3.57147666086063712e-03, 3.21579748226264893e-03, 4.34117628182347697e-04, -4.10095064337810981e-04, -5.61845319865149692e-05, 3.54083313631056392e-05],
        29, (15, 13),
    ),
    'sym2': (
        'sym', True,
        [4.82962913144534212e-01, 8.36516303737807942e-01, 2.24143868042013389e-01, -1.29409522551260397e-01],
        [-1.29409522551260397e-01, -2.24143868042013389e-01, 8.36516303737807942e-01, -4.82962913144534212e-01],
        [-1.29409522551260397e-01, 2.24143868042013389e-01, 8.36516303737807942e-01, 4.82962913144534212e-01],
        [-4.82962913144534212e-01, 8.36516303737807942e-01, -2.24143868042013389e-01, -1.29409522551260397e-01],
        3, (0, 2),
    ),
    'sym3': (
        'sym', True,
        [3.32670552950082632e-01, 8.06891509311092658e-01, 4.59877502118491599e-01, -1.35011020010254612e-01, -8.54412738820266721e-02, 3.52262918857095403e-02],
        [3.52262918857095403e-02, 8.54412738820266721e-02, -1.35011020010254612e-01, -4.59877502118491599e-01, 8.06891509311092658e-01, -3.32670552950082632e-01],
        [3.52262918857095403e-02, -8.54412738820266721e-02, -1.35011020010254612e-01, 4.59877502118491599e-01, 8.06891509311092658e-01, 3.32670552950082632e-01],
        [-3.32670552950082632e-01, 8.06891509311092658e-01, -4.59877502118491599e-01, -1.35011020010254612e-01, 8.54412738820266721e-02, 3.52262918857095403e-02],
        5, (1, 3),
    ),
    'sym4': (
        'sym', True,
        [-7.57657147895022115e-02, -2.96355276460024929e-02, 4.97618667632774958e-01, 8.03738751805131990e-01, 2.97857795605306064e-01, -9.92195435766335260e-02, -1.26039672620313018e-02, 3.22231006040514661e-02],
        [3.22231006040514661e-02, 1.26039672620313018e-02, -9.92195435766335260e-02, -2.97857795605306064e-01, 8.03738751805131990e-01, -4.97618667632774958e-01, -2.96355276460024929e-02, 7.57657147895022115e-02],
        [3.22231006040514661e-02, -1.26039672620313018e-02, -9.92195435766335260e-02, 2.97857795605306064e-01, 8.03738751805131990e-01, 4.97618667632774958e-01, -2.96355276460024929e-02, -7.57657147895022115e-02],
        [7.57657147895022115e-02, -2.96355276460024929e-02, -4.97618667632774958e-01, 8.03738751805131990e-01, -2.97857795605306064e-01, -9.92195435766335260e-02, 1.26039672620313018e-02, 3.22231006040514661e-02],
        7, (2, 4),
    ),
    'sym5': (
        'sym', True,
        [2.73330683449987712e-02, 2.95194909257062675e-02, -3.91342493023138435e-02, 1.99397533976855612e-01, 7.23407690404040848e-01, 6.33978963456792166e-01, 1.66021057645108494e-02, -1.75328089908056234e-01, -2.11018340246890423e-02, 1.95388827352498302e-02],
        [1.95388827352498302e-02, 2.11018340246890423e-02, -1.75328089908056234e-01, -1.66021057645108494e-02, 6.33978963456792166e-01, -7.23407690404040848e-01, 1.99397533976855612e-01, 3.91342493023138435e-02, 2.95194909257062675e-02, -2.73330683449987712e-02],
        [1.95388827352498302e-02, -2.11018340246890423e-02, -1.75328089908056234e-01, 1.66021057645108494e-02, 6.33978963456792166e-01, 7.23407690404040848e-01, 1.99397533976855612e-01, -3.91342493023138435e-02, 2.95194909257062675e-02, 2.73330683449987712e-02],
        [-2.73330683449987712e-02, 2.95194909257062675e-02, 3.91342493023138435e-02, 1.99397533976855612e-01, -7.23407690404040848e-01, 6.33978963456792166e-01, -1.66021057645108494e-02, -1.75328089908056234e-01, 2.11018340246890423e-02, 1.95388827352498302e-02],
        9, (4, 4),
    ),
    'sym6': (
        'sym', True,
        [1.54041093270448261e-02, 3.49071208422216265e-03, -1.17990111148520038e-01, -4.83117425856980573e-02, 4.91055941927973749e-01, 7.87641141028651126e-01, 3.37929421728165869e-01, -7.26375227863765988e-02, -2.10602925123708519e-02, 4.47249017707813945e-02, 1.76771186425400792e-03, -7.80070832503238117e-03],
        [-7.80070832503238117e-03, -1.76771186425400792e-03, 4.47249017707813945e-02, 2.10602925123708519e-02, -7.26375227863765988e-02, -3.37929421728165869e-01, 7.87641141028651126e-01, -4.91055941927973749e-01, -4.83117425856980573e-02, 1.17990111148520038e-01, 3.49071208422216265e-03, -1.54041093270448261e-02],
        [-7.80070832503238117e-03, 1.76771186425400792e-03, 4.47249017707813945e-02, -2.10602925123708519e-02, -7.26375227863765988e-02, 3.37929421728165869e-01, 7.87641141028651126e-01, 4.91055941927973749e-01, -4.83117425856980573e-02, -1.17990111148520038e-01, 3.49071208422216265e-03, 1.54041093270448261e-02],
        [-1.54041093270448261e-02, 3.49071208422216265e-03, 1.17990111148520038e-01, -4.83117425856980573e-02, -4.91055941927973749e-01, 7.87641141028651126e-01, -3.37929421728165869e-01, -7.26375227863765988e-02, 2.10602925123708519e-02, 4.47249017707813945e-02, -1.76771186425400792e-03, -7.80070832503238117e-03],
        11, (4, 6),
    ),
    'sym7': (
        'sym', True,
        [2.29183395405377138e-03, -3.28329784746681126e-03, -1.81266051313384649e-02, 2.04642075775460369e-02, 4.47423494683523854e-02, -1.01010920868420298e-01, -5.68044768896669786e-02, 4.83610915682267717e-01, 7.81921593291728168e-01, 3.60218460906260252e-01, -6.41312898073858328e-02, -6.49080035471884947e-02, 1.72133763008045053e-02, 1.20154192835491905e-02],
        [1.20154192835491905e-02, -1.72133763008045053e-02, -6.49080035471884947e-02, 6.41312898073858328e-02, 3.60218460906260252e-01, -7.81921593291728168e-01, 4.83610915682267717e-01, 5.68044768896669786e-02, -1.01010920868420298e-01, -4.47423494683523854e-02, 2.04642075775460369e-02, 1.81266051313384649e-02, -3.28329784746681126e-03, -2.29183395405377138e-03],
        [1.20154192835491905e-02, 1.72133763008045053e-02, -6.49080035471884947e-02, -6.41312898073858328e-02, 3.60218460906260252e-01, 7.81921593291728168e-01, 4.83610915682267717e-01, -5.68044768896669786e-02, -1.01010920868420298e-01, 4.47423494683523854e-02, 2.04642075775460369e-02, -1.81266051313384649e-02, -3.28329784746681126e-03, 2.29183395405377138e-03],
        [-2.29183395405377138e-03, -3.28329784746681126e-03, 1.81266051313384649e-02, 2.04642075775460369e-02, -4.47423494683523854e-02, -1.01010920868420298e-01, 5.68044768896669786e-02, 4.83610915682267717e-01, -7.81921593291728168e-01, 3.60218460906260252e-01, 6.41312898073858328e-02, -6.49080035471884947e-02, -1.72133763008045053e-02, 1.20154192835491905e-02],
        13, (7, 5),
    ),
    'sym8': (
        'sym', True,
        [1.88995033276768911e-03, -3.02920514724133087e-04, -1.49522583370621971e-02, 3.80875201389448918e-03, 4.91371796737302829e-02, -2.72190299171034822e-02, -5.19458381078817949e-02, 3.64441894836178948e-01, 7.77185751699628002e-01, 4.81359651259053389e-01, -6.12733590678110757e-02, -1.43294238351272640e-01, 7.60748732497660857e-03, 3.16950878115259890e-02, -5.42132331800010718e-04, -3.38241595100500234e-03],
        [-3.38241595100500234e-03, 5.42132331800010718e-04, 3.16950878115259890e-02, -7.60748732497660857e-03, -1.43294238351272640e-01, 6.12733590678110757e-02, 4.81359651259053389e-01, -7.77185751699628002e-01, 3.64441894836178948e-01, 5.19458381078817949e-02, -2.72190299171034822e-02, -4.91371796737302829e-02, 3.80875201389448918e-03, 1.49522583370621971e-02, -3.02920514724133087e-04, -1.88995033276768911e-03],
        [-3.38241595100500234e-03, -5.42132331800010718e-04, 3.16950878115259890e-02, 7.60748732497660857e-03, -1.43294238351272640e-01, -6.12733590678110757e-02, 4.81359651259053389e-01, 7.77185751699628002e-01, 3.64441894836178948e-01, -5.19458381078817949e-02, -2.72190299171034822e-02, 4.91371796737302829e-02, 3.80875201389448918e-03, -1.49522583370621971e-02, -3.02920514724133087e-04, 1.88995033276768911e-03],
        [-1.88995033276768911e-03, -3.02920514724133087e-04, 1.49522583370621971e-02, 3.80875201389448918e-03, -4.91371796737302829e-02, -2.72190299171034822e-02, 5.19458381078817949e-02, 3.64441894836178948e-01, -7.77185751699628002e-01, 4.81359651259053389e-01, 6.12733590678110757e-02, -1.43294238351272640e-01, -7.60748732497660857e-03, 3.16950878115259890e-02, 5.42132331800010718e-04, -3.38241595100500234e-03],
        15, (8, 6),
    ),
    'sym9': (
        'sym', True,
        [1.40091552591465663e-03, 6.19780888985507284e-04, -1.32719677818171379e-02, -1.15282102076791886e-02, 3.02248788582751976e-02, 5.83462746124982089e-04, -5.45689584308333697e-02, 2.38760914607305225e-01, 7.17897082764412553e-01, 6.17338449140934276e-01, 3.52724880352710546e-02, -1.91550831297284396e-01, -1.82337707793955098e-02, 6.20777893028857664e-02, 8.85926749340026909e-03, -1.02640640276331230e-02, -4.73154498680043701e-04, 1.06949003290861223e-03],
        [1.06949003290861223e-03, 4.73154498680043701e-04, -1.02640640276331230e-02, -8.85926749340026909e-03, 6.20777893028857664e-02, 1.82337707793955098e-02, -1.91550831297284396e-01, -3.52724880352710546e-02, 6.17338449140934276e-01, -7.17897082764412553e-01, 2.38760914607305225e-01, 5.45689584308333697e-02, 5.83462746124982089e-04, -3.02248788582751976e-02, -1.15282102076791886e-02, 1.32719677818171379e-02, 6.19780888985507284e-04, -1.40091552591465663e-03],
        [1.06949003290861223e-03, -4.73154498680043701e-04, -1.02640640276331230e-02, 8.85926749340026909e-03, 6.20777893028857664e-02, -1.82337707793955098e-02, -1.91550831297284396e-01, 3.52724880352710546e-02, 6.17338449140934276e-01, 7.17897082764412553e-01, 2.38760914607305225e-01, -5.45689584308333697e-02, 5.83462746124982089e-04, 3.02248788582751976e-02, -1.15282102076791886e-02, -1.32719677818171379e-02, 6.19780888985507284e-04, 1.40091552591465663e-03],
        [-1.40091552591465663e-03, 6.19780888985507284e-04, 1.32719677818171379e-02, -1.15282102076791886e-02, -3.02248788582751976e-02, 5.83462746124982089e-04, 5.45689584308333697e-02, 2.38760914607305225e-01, -7.17897082764412553e-01, 6.17338449140934276e-01, -3.52724880352710546e-02, -1.91550831297284396e-01, 1.82337707793955098e-02, 6.20777893028857664e-02, -8.85926749340026909e-03, -1.02640640276331230e-02, 4.73154498680043701e-04, 1.06949003290861223e-03],
        17, (8, 8),
    ),
}
