// Base64 PNG fixtures for the node test suite.
// IMAGE: 64x48 RGB noise. MASK: 64x48 grayscale with a bright window.
// TINY: 8x8 flat gray.

export const IMAGE_64x48 = 'iVBORw0KGgoAAAANSUhEUgAAAEAAAAAwCAIAAAAuKetIAAAkO0lEQVR4nAEwJM/bANiigkROChMELM+l6ICa97qhio7uRtCrAGTajQjDutcsFtwFihRMemtmBwEfAquGpUGcwmF1/s36YK7ypdavs2PfIpO314VfT2t7t+IS7odbq5FAUreXgFbBY1PjQzm2ngwVYNRmyFA9yd8UDqtVkibbcuTLszrDDZFn/jLxF56T5Uzmq+MywfAMXaIagqDC7GhwePMxfwxs8Z5Z/ZnxBHXUwWd+a4Y6yBNpR7u/tevtLx0huffsqvbeAx7cFfrS9AFbJYOdOF9pdFgZggFpeegIKyCBkmQEnEZA5eIKJM3F2VA4SBhgciJrJMbCK5KSj5PPuCjIh722scwftnvznfoEPeiNKq3PkcEt9ILMpTrl9jRdaSLlIgOpIOrdg3qdWR/4d+UYiACv4r/SCgqzJ0dBGfrki3EETC5c/hV/GRRHBp36XvTvDxCoNEgKnjVCNOJeXk3gwi4QW2S+E3P10BeKZWW3r+ZmAS605kCftCbbG+icJx73k7k7L6zNAC98NMgEZGDLHgB388A4+DdTQy3B2f3LX6a14G6K+AC56U4mlzGLAD65OWzw4MAkcKk1QJhT443W07ry/zQpp7fjrjABeiO+5Vge6TBdraFMD6latVkIDt0MuEVFWi8kXTftpJUJBMdFdRyLDm8IZvbFWaVhJjqVo/OQ1o8+EHwJpxQfOk6K3ooT8b020UFOrqKgGzSfnnyIAQ7ZEXowFxzSB91LCu153b8p5VJqbNICYL/5Z6pwyohXAYVNzFWsqnQMJ4AFBNcMkwG0aeDNEJDxqOji4P+O0n2/LGZroeqLuP+YaAijmRJoFXtqgwSY7njUzhUBl8Dij/gErqJdu9ATJ2Iet0XykXbaDJPj7K/E2RF5d/cXDV/2G2XZT5RYJVs4sa2aPQibxw3hbDrkMjSUS2RGXD3cIMFVAfIM9urjDkukSxBl4Le6VlFxemgI6xq7ru5nA3+Fmr8PLlHXTn9gBBvWJcJQrcpoyHlxaslklekuq2DB5PfLmY8EpMikLi9PV57xyATSSCG6NWEhsT/Isfu7aQg04PvPDt0jwVvd2sWLX8rcikdBOgVqkeUG1lSGDoO8Y3DFbB0lmivXlkRf0riwcnUrTFPKZ5C8N0XrYqEMvssz53BjVTRou8e7jJqKyxBAufhUEEjYImoB2tpzepT/hMsNjjHgH67L1kxTI2s7Hdy1U157oG7dk6CIe+VteRZOSkc6HUpSo1EMnsLSLyDXJMDn3dEzi+ADzLmHRsH6OxI4V1Y2+qPPxulZMMcHNKFaxh0CUIP8wuMjwePq0LT/C7lYoXXv7K7yhWcgrM0KhsIv7vyCXTcMMlUQ1Z/CqOObrbhvDddz5nY6UUGl6vNiYZ+XrpsOGsTUnkiUk+o5jFK5dgOzuPkKJnkqQsZS8SMnM9y24gZT5nREIEG2Xff5UuwTgUq9RVGiOg0bwlYgencFlx6nd6v+q5Js44jkuYec4PfYN2Dk2ZR76GRh9/w503li7rbXc0oh+5AJ9p7VRCZROReUQTHVAE62s1xmePX67qEBBLeQAPt23MdBHU/q/KKHXFDUHL3hCEAQouc7wbawUT7bA1SPerqjxqWzuRFxdvJqGROA+iy5fjSwCo+ooVj68Cc9B+eI5gF7ckN17X52IHEyCQ4ZqAkA1AGknNEvyYYYNj4JSMnwscWVnqmR1zmy4uMbmMOt38wM2iipwSb2QQgpg2Wa30CGk7lyDR9acFfXyCkCSG7S2QiBlPZGS8guZowbG4kO/h+RVXfYBP9hP81P+5L52kjvjdWgS7678PlmLgDN8u0HgBBsB0ip1zhoksTK/VSLPgG4dXmCJrkWEbtg29LjMYL0J9U5THN92dalckVFwF1vS/pnbd7VIAPdt+tlN38rMrXtRzLej6uYttoWdtHT1oVA8++2b+hO8LnMtx8aH/Od6kWHYrgsx8Kp2f4h1IPVZBDJJXa1ugyQFvmDa2b7vGm5LmXHzkV9kNqkhTJ9CKb7l9BkH2LYoUHDPz/FTsH+180iiL7hdzdTbbsn1/lS5Scv/JXqfklAzxcWnOgEb9PBKzI7F5DhsdyP2AVZzPB+uMXMMBawVjQ07RZAeWJFYrMt3Qv0N7H6h3OX9DcYf1U8Yoq8fr/Nzotlp7hYmMSXhKNZRDB9TvN+lMAzJ93avppsxb5uwaGguxQaEOM2tEgeD0BeYLejZisRgjRhsaOBq9J/oVCQBC1oQVjYFHbhPlDBx/9JxY++6TIps23AePV2kSsRDFVgMwAkA6jMsW29vgAa3gIRZkyODIUViClL8p4lRQLAVuPsIdCyPtlHAYHhqGCi5DoxWljd5uRDjGvx5utBgfoCqTPc8wH8LUaAIZSeC/CvDDFR02SFTUl0AlNm+wARo8qngNKESm7tu/n5KLz63/83uKc/DlF7Gebrk1BDRKD0lsrjCrPbjxfds8HAU5Sqdjz/M9Oy1JVWUBiBkvrnP3p3BlagJWybDb4k3Gd2Jsv6doe3Ri5zVMVaJDlfVGqtVuDemYPWfTiK4zbWNNZwwp+35PWOwY5ng6IZI/gTf0hLm7Z4XSwWsx5JdALA3LimaUXd2yKst9eTWMQQ0m+l6d/5zNHWqiXpZi2s95TyQTpwAbKHj1XrUIpXyjli7TjzFsYd/Qk8JoG2HSt+pGEXjCD74haAJEbVqD/QCz9B6xFj8vtDIDcTjslUc6C/JU34FKPBepEyALrPel3i3c/OGOB8AA8XokZSbETVAC0IIZWq3KFoVPogISHdZJmhti42iLN2jfShAMyOtnxVyDA61UGHhtUJD4qDn+SEVAlu8eWOBbLTTODSx+p5b1IAmUMh8JscasR/BUc8b91aWd/tBe1CzC9lcdr3dI4gD9n00DUiidzohGq950SPNs3YRJk6JQldWtu2dzdVH1Zt0uJzSvHsT9jAZEgVw3EEJCHNQprda1I8e84bzZDgGPskV8yRPuQPh5n2JSkNG9OHZTrcer16MykVBSuifqpbRNTbd96NtGIEwHyvWq72xNJlih7q0INYjrD4/FGy9OefAwuZGxj+3lP0jginIVnU+69M+gPAsJdBiT0Cusc5Ye0bAemLhHX/Fqh6OyTrtBqsztBTS9vor1rRM8hABKIHrD0IZGeuOsLPSLAV0LNe31HTiW4vk+xFXeZ3qbF8ISckwXmCC4E6cwOXCgQGsQgyCQq840CUwd+xmCfLkI6S6a50Xf6tHufIclQ6+NRK/SMu86AgdVVUGuxNtxsepPTthQvq1a8Pe0Vn9pDWyE6DOiwP9LNXL1tJ/OjY87mgPEUVknv0KPcS0u82nb21iX3J9IHHuuFUbgVJXO5bokBX4UPVrwDLE/YGkTaZIk7K9SbpVgwDqe1ZURHWdvXRubdC3X04xwKy/tO7iienVVz4MPOxjwDVxw0BQZ1Vl6Ya5JcgwXWI7quqtMQ0+ey2UweU0BrA/iimgXXvkBQGRj3L+HcUvCTLklrFDtky23PBO1j8lFLPfSPqFJR0lk9SAPeD3V/p4XtVFqiAkD5MkHeeXZ88XBbJDQw4sRXzJs0fPV/XPKoBPgg8/J4+wAozn6uMCWO/uhfuoWXxX1aDAjtqLMlji6wAFwOwI+rOHFT2jjwOGIzTB1g0tHIxhcwfHHUlx6OzbV48fpbL2kPiI5X3lt5o3ql5nAknvdvJc/ZKCTHPFFV0qaLlrUAG/c8JDB0Fenu3LOwP2Hb3InCNZweWwrCl5iSWref2aQbE3f64FPW09Oa85IbezEeUZ0eB2/cyQz+ou8HBJVXdCoDQ8yDiHfEqLkjUg9wJ8belW11tlcIo1v6suNFWWOoetcxUWewxUrVRuQdcsukbiAwxp4H20RDXwTo6ANrbAAMGMf341pJsIagB82iEbu+Hz63TJ1VRFA1Y/rtszK0ZSJMkXTEkA2WvpPwdFxMqdsyjokTx912RbU5J7M3WL2lg8ajH6AbPjRXv3LHJY3jYjelxRg74USPoW5j0GfiMg52SzvmUAzOm9yZLLbjUr+Prl8MeYjcMfae5A0wNWwX2kjPIlxGvUR1gAeURpLJnfOvFr5yrSrUdinV3mPfGkVln0xfbMXb69PWnAH8TLK3qN7qpoDXuZYJT0z49xQQZclrm/dZ47CqypksG+YnfFmdNGR/XRc0hzfhTX4OxKQ3p4/ezmEX6IJ3Id/Y+0RYs0iy28B+xR8pAunfv5B72CN01BAlDLLyAp8jsleNa7p88KnlG9hg0y7TFNYj6kPpcTtooEFJORPXyWkOjkH76p6QgbDbYPwAaO9lUrbGjJcKTvlEE05XbgW2CaweoY10CTkQKolshaVK7hB9g2wslhkJXDL6+eUYEyKUT5obuPSKswaPnyLzvmguXTqFutaYAFdsftt8l7BwhLChoJD5fOhqgmx4oNovpax4HOI/nEceCclX3Y1Nwlz8z3XVxPva38y4H4dTkRsMK4ftNXA2B53+T5gthxaRRhfLb+xGZ9+ebWwtGvbo6jrwGPFjsAhRO73csXKKFNAew8cE1ABXAmoSrglEP6Zonqyvt1x1yFI7Iw2d5neMOORp8ACtzPG2cw5nKYZYC53IdRAf9ppNu4Wmwsxc4fYvy7IdRJJnCnsblu8qozdiebaNWCeSHFTL3ArZSTZ//p1ID0DPnPbsWTJ2Qqyp4AyNpMiEoJpi+aW+RgXBb8jE/ioWYD+dUwiJtNQMy/Rrvwy6EsqrTf08ybWRp15BRQSplVLGk1/ZvzdvHWM+ZjuaZfuvHAS/N0M25XjqKl2bhGjjqqPy9NowHldDYuhQuz1YtLF/lv+jA1R0fmoP1XWZZueXtS70PF/BI9Qd2pC1+AgD71yXvGBuBl7TyUTyjGuCQUYFrkuHi3as+1qZYp6s861raO5svjeQXJQBufW4HkmfZfevaQ6xSWYUutAtuU0kQCixupSoz7V8bAdjozdaCGBiuz32s0dwtMy1a87w18m7GKrdShlTempOGFvP1zaW9NUtOTWR0AkpyL+4y9GByVeTvbJo93TAZPQkj1F9vZIxkRQhuKSFL/JKMKBkG2dVtsqFwKAJkOn40fofR434BTTlEu06PeOlDkwdNMiCT30RJVGtBzBgwLt5AedZiOCrTY70i+AzAkR2d72bWvHEYbk8H0TfxtsccL/wCG4iq9YvkR/ipsXid7N8p3sbGzKSEEJ+vaRLQjLUDfQ1zyKQf/Y9JjRoLd05aijN+/X5azZ+hyIMwXsk+l6BKIywnedPu1FUP1OqmRJvk0/mJbxJIrsXyU3x/vgzq6ZVQG1PPCGJb2W/n7WkOkrcX/h6ewDKLv+Gwq04iLXoRRAwPv1LsTPr0QHXRbEcXr9kGipU1ppIRAbRdtpZ3QuZfEe8jQdeeF/SK3huF363HIG44glLReOErCg1J7KHaDrK8AmHeL9Eq11BzRd0coJ3dmO5nR8vHoJY65pOH3P+0IIH9Img6Un8x7zH8vc5p3Z3Co2TBVldsG6XlTbDYeCv9T9A5LNNAT32YS7mk5TICTds+0Gg8ziyLghQGEEuP5CeQNdRNNobMQlTt7tecOzQLP/RgpCvXI7J4EEaipcZSoFsz4RJtFnW9nXJa5NLHE3yjNcEbpx7nO28ZmBZNRyYMM9FArrwnU93izNX0+sE++QLF7KkQONQjBl5LukZeL6/DuwJdCQnpHfGrBxf8+LdsF4eKmSDM6PuXmD223S7RPKyDQHnD9DgvPoFN/CybjYAnCCMCYsUV3G9nIeic1IR3OQs8gaOFJfv7ZFT6sOMjwS05sjQSMvBeBFV7hrDG6lnQp5VxN6c+dYvU1tTVSqF+jZmaelTzk6rG6kim9M8SK382KY1PLuFijgn4lAgtckIFK5bhSD6X5DXchYYfT5l6dQZEjDytVhdPA8ziSGXL78ZTrMZJSAIfhIIBfSUt17jb3jEAKAgu79V027NjmBkpE/0CyNark0R8MBsW8I6xNRFrccK0mnZQFxfzTl8yBosmaxFb/WKeaF5spVM1we+GoQLiaCk5x5fB1hK9NB/Uf5Z2AnDbXgGvux/1DBKkYTMnW97rfiSz2L9nqzD2+0qasDj0wsdeCodAWtwpP9OxtJBC8YYYAzjXVDgHTpXj5jKdrBkOhJEmxAaQXf1Ilg5rrUvroaK34Gha8oyveJsdScn6Zz1ffZJ1IXeQW+m1A8/PItQKBKJptw9UxWByqyKxoloT4dWFI14Y9N+MN1KkB3IjlfVIzunJ+UrC5g7kWw1eO8gUFVx2rTomtddw62uzwbwliT7qTNa5JU3+qjNFcJ+f51RCs8QsGzLNDahwFDKO5Ulr+lTw59TR3/em9Ou/61LOFVkz5ukUQ+vJg+hfIajAqKBTDlnP7/NhnXh2Z2Jg9OWQ0kjzed83UmVhljwQjVhtOLtzwiOp8iPWyzJpOAN1aq8j+671b8n0Bc5x/rjKNOC6egGDZaSiXPf7Kjcdlh8WBFliAznNoWSSIiEswIMyQc0SagjijBwi4NEv+gCgpi9XCCh/OeOjHhbcedMpF8V55oSqAxpPUAw+ijT+NOZQzVDJAAisB9z/XcNmNJi4xuLZAUHvHpGgZ3abgc/todpVhwoGOHZcMTPVmsQqvv5R//jd2hC6iUyLpffxJSUwGGZNzmSTB9nibwETBPU1XYQ3qTLEKDYSp8xfv6ukQuGEHM69pjajyMZ5m/kCKn2lbLRKhc4AqnSyvdWGRRfou7cgYfAighmk+QNXIuzQ5g71CskWiSwGvxmp+8l7wuIQFj/Z7EiIbrOl+ZbsEux0aNyIUxE6DGeIBDpJWZA/wHfO7KE6BRQI85eiD16wgG4YfE+wCY8mg3jBFZJSQZef27M6EVxtRrZJyPS2bs7OiSYgdRB3C55oq4RkrzJi8JJe7B88iso0HMxlsK6YqgMra6yMOcKBVh7uvnGBFQ1vA9YSL0xSifmnEi9W+nDgesuLpq5HY0IIAoLimUi/+UfGqlr6R+j4blFWGP6yR990nxjUxK5nQ11iHN6OM3/CTRdkq/K/lWsq+6HtrwoMnVGLIN8dFPummZ78X3I8v1yO7lEvQDWjkGa7IzDtSbEerWhUxLkLlbDwuoSGsStBd4/LWzaHDRjMkHL4Qq4yxyzyW6JrE+IvSmXfwCdd9bc1nlUiUuTN4oekYE+8nyYv4cedYeHzEbIPgsiPvcOsFbJuFrzFJTanKEE0kL/66FUp6jTKwKJwa8VNHAHCebiVum1esPSMpedOyJCy0NTGHERP/OXg2djb1tuUiUjhYMXpN+tyYBD0GFpDMYL5+8orM63EpwiHD0Ip5Ls5nvkrp61khltdooXBA4trScYTJHuU2ZCnDeUSlVnqpmix993WJgb29aHrecol3UWJJ/kXJtGqDhxyNEz1qrBgMCmTtBA+HN/XDh4H4BEex0+0iKyW4XcLnwcJbYxrLMn/KZZfWOFVsp2n5tl3kA0OtJiCLstfDEIGCAKSOLFZaEMChkFYBMRwS6k7jzOp5YEeS0eoESBL8PWo+JQRwoeFrt6q7cj+9Va4kfO0TJXdUHvF+ehLHwsmCnXxOAQDJxd7Y0KJDDPPubIpWrKi0WKdPtMO0t6dHZXuWYR8KUqHZYuL3wsWX+1la3xQBDSFq/qRHR4CZCbgNVrA2Vnv0dX8zYM6cf3cvnLZPvKQ9HJiJNrb64FSx/mhE3Wpgv/6DpgjUy2IP7dxYW4uN94SE02w+Lbv0/BhsGqn6zg5lvKaboWyBP+3oMs3TefXIpiDJ5SlrW7C0HsWPZv1dmS807XS+opFjBIpZyk9n7Hoj/EyjV9YgB+X6TdQGmwrBA6457wChl5QMaDlUiALbHqU0/XDTCDf96KWsk2oCQhY+vM/PBdVW/7Y3fJJCqAyqpf5T09BF8m6mH0qA79INeGla7qCMX8fnIHyEMvHl681PX6S9WRYjv+N70LGmKXTDII7CORVQPpyfmxWHwG7JkK2fVymyOTH/l3RVlv0/BrKTDvDKvIZwwGmycOAGKJbil2n8aTTAU8pSHDUUVYZS6TKtSAXwBavZKb6s3QiJVVjSwIfyUf1NT+u7jzozaQHf99PjLpQqlKcRRb9rxJibQ4rlLtLJW9Pc+BY2kHrI2VHYY0PEX+q/mZMkN4kHuVo7GoRCFzFRQEEI92Am+9gQ/VxaKduPahnQ4jlr7xeC105KZ2oniYWJySrq799q4sVrWa8lkopZRoTXs7GJVZciuvnnKmHVBXp00YwZcAL0fw8OsXOzgBlpPQEkM0BHU8Wj346tegBVEbt9zifWoSyxhVAuqr5r9MO2WWED53z2fBAOAO9D5ScLzXphKOF7lUh0Wfx45EdYeX52REcVsOzXcWLIi9CA3Mxu/Z+UsKdS/P6Mw9C8IsEVEP9YzP1Si/VrmDJ2PCZ5L3U2soPEduAjKi5aeCZoBd5zIBeBbsauTYtz1H1G76/qDtGoJtmujOwFYUQvyPr1zoVpDotGKH8Y01PgFAvhS0LULgsjx2mhJ42htWo7fYHWfZyAkuzOFOaItjyLlrepAoiH0ADf0ykGHYWnjgQQ1LaZjolLEoAIf+yI4BRmsU6dfv7Gyn9PNO+TFlEcTtsF1pHjhcPObrLn5hHRu1ol+ggVRKx/W49ILJmapmiYLf8ssVl8R4lxoqOFMx6UTwxmVfx2dJwj/pUt/aVIpWAgQCRkCrc1cFIBL1KBRDHAr9IzQ989Q5fFypZb5SjaHFlyx+hLXe/7HQsjy+Cc3vVgzbhuiR6VXsskiDe9XeGmw8qu51f5QBxx32PSiJLVBsWBYpqJsC2543k920CabZVMzkIqqCyi0dN2oGcDhJs95P638nY/stb6yFq43IbAgV0J4GOjf7zBxSITwVsatIIptTNJRoxVBcEn+u8tzZbroCMAiTHu+prQUayoYJ2qg2RloUDlgAbwhZaTwkWrWCYFK0qarNVBpmWKVk+v4PMMR1fZVFaNqKzUgKkhNRaVYGWhtAM+qPdUPjs+zcQaphJAl8XIiaa+h+qiaPiDKdu7cuEcukIt1wAbwerQ4bbArSPQ62MmGbqs+Rx194C7D/a7iB7R1nmAO9y8mwDKFcfb7NmkAfnPtTwKOczIfoM9bX3LLJLTv4e4eQn215zZ8MPl3xuMMbQjOLTniw4qIRlawrrEe4wiSZCCD8XMSNxbbhECA61NVDBXE/+kS91v5Vjpd0+zIoyYQKx/Cz8lz6qP4HED80Pbzu6bPOszZtyNdzXUv0PngFSyuxABmfFsQMFMIO2HnkfEpHVuh5cIDY0d2Jo6H7O7q6iAPoYdh/UB2Ga4sQHfPhoCeN0B5P2EaOg0ojE5OFAGolR85iDSiSX/OVBq2MP2B97+FsR8tax+ycpWrPfzkXylNZuvlzEisa9FxRWbNrxvDTy3NYCpmmI0hsebu71xwvw9RQXBcNMIRBQz06bWiHaNC7N3m5fYhKp337Dg3LipiqsQGXTiz5mQnrXs6BpA2euxBVKJFh0bTk6Ed4qZohTKw+WOeWZAAxx99r9YCTFDNlrB0NPKowar3xK3677QFb1ZQQhji9G9t/SMMTS8SxIvZGc87+pkywPHnYt53uLHrwf2ryqkpLKRnQJzrFPy0spERygDdRYJGnlPRvskdVCbW4WyYZOxjO/d+fa9I1OggB2cLZb7iOkA94m0nN9uRKf/i1FIvxOGj23utNqtHbSPxsbfUDu4NUVevKGKMDDnVUFFTw/Ccq52RN8CfSKsftcKwlkU5kTc23dfsExLASEC/EXMvwJTnJxeJACSYaRDtF3uL6KIzn+2Q3ihHqfRKggm0gCLKpqzwgf369fJ9InLpOhK1Ng6CvuKxU/3XX7brnR0CaYI8CQqw/+NLYZHU9QLLCDYeaF3eVfjwBBnoWMKZZcb4qpVBPen2aaiyW1TErWAPqEJ+XZ31kAu8GFhqstBb5J2tPgw1oOy0j7Zg2G1psKjSCOl+eVFaYTZlAxZhhePZLaCetUcNfCtVUkgORDk80Cxr4tt518lXkt+E2ejBqy7MSAfEP+ZBPTz4qx2T/2ASfGKicliRhHwwY7k3HVkwkAAfQBokGsAIqgFnIhCkEa2DB6Mjk68TQc7HJysAPmdUGsa/G5Ta4+sUYW6O8VCxfCjHzeWJEFDdqoYhGzvzwTzgazAmNxXF9pNzuCjGk02vmO/ZLtg0/2DhCr8k7f8YLinzLJFokaf6kPVl2YNY1RyBK10n21YOvPYKUlyaVPO+WqVqRTr4hLj+li+VLdL9UMfMVM1MKN0qQnqpsApFucPJkkRarbsAjmwyVilwV7pMGOhe4ySw0Q9nILDjNpTXoGKARJOfiQYifImlDawV7ZumoFsVqR7nJBAzXL6/7viBA21hemfQmrB3my1QeQc9kIOOKYkJyW4V0XeiIlIgdoofQMllxO0Mp3CzQKOvytTZ1lm0vulJGh27yY8V7j7cMSpwiL/aYz51L4qkpoY3Q9ZPOYaES6ykRKyZY2C/IBRxxoV+M0xdl+9bwA8z+dulSXylipr9Q6y6UOYiQ9wFwtYQs2fWurwetZwv7m0l4Nu0K71jMfp4UAOXF/D7ahfSTD5CIE7n1OzN6Ymibiu/t9J0DFqWEjkhnvW394mA1RsmzK4Z7vILlfHimlJOk39AMm7fHmAk6sQSW+xLO47E2hZBvIKrQv2H70ACIdU7lNHyEL6tWW2mbeOzuzjkv4ZMxeG5OdHTrkYGLBVHRW3CwhkUiSSAj14cWRvrGjDQFa1uEnT/YbwJkRROH1AAyqlvneYzLkfZE2yDbnT5rAG+US/VZKJRXA9Pc4KigMDDE5OJP7dFQD5hqE/SYPi7f72IK8UBJNAn2BJiRz2vPDb3MafAAoHDtCtMjY24UjBemQXQLALjySBP8EoHIC+BUKSz7YBABT73DyoY6WDrJA5e+SPJuQmgL5ikTcG7h75lLUfPD9blXbpAGZx6JepVKlqk/yPvy/7fpvGNpV7EpGLVSokMgbDBxpICN+bf/JfwISWWlwelAkQpTCAXgBsd+q/ncxZ921ODLVBEfVo2qMBlPyl4lPepr4N28lvrxnvY7FqCSy3ZdV92y5vd24HDhKHGUMROT/nwF2iqBu/eaELv3jd01N5OUNQiN/2SQE2wSWXJaWFU+Qb4XEKzYhz//fVobC+hro+JUcunNOOIAG/hHZ5L4KTXhXyvWxQUQZtguMCbVUR2Oz7KHFrOagv8kwjzQ5Av3t1/0XiPEeQ4UfmHM0i0GcNNDpzv2nbb732xh+3wlXXmS8skBqkuwJ5sh4IcD31ACSHAdpxLIUPufsO+NEug0sTG17zdBUNBv3PZHvuDvA6UiJ0eip3Pyoi3TN7PVaiI3rn0MA+BRNlx55HA36s7mAcJ/xIpIxG7UZ7DlaK/oWN78v8bnbQT7z8AzrkOXMSrzo9AY6Sp0ZIUklZrz9sT3F+d73L9W23c6FPfx8nlHIGRnbvb+zArFmC9BR9Eg+CfJbdwYMAwMtGDCM8f3A0z/2K+1P5FDPkpzWsLfxpaVjFVGHHMnKHKoTFNiGFrUnL4OVkErISbjlEjSPN6+4/CDL/eUdU2eFPA3GzAiXmLFz/u/Qejk3FvZWOKxTCobMFJj10y1XAHRSUR6EKKZKc1OHabB1rvBM6bEXlSzijLFHF1XE/hf0+havqKPzbTILkydzLytWxG7b5NxZfxFIwmAKbeyOSqxmgP7YUpSH6tvcrjpJPMGThbsIRcHrz2YpXGfQex+m/tvvJOHbfW3hX3IwJM7cvZQBMb5AH5cKS2ItlEyXFgeqNrYCQRbOTOhs6NSpXnHZDiX5Ds1SPznL8g4T+9If3Rou1fwRplGNOOI+Xl4jmPWFvPqi5L9mOqJvwl8b3Z7yuQC0sAcIdPFKALsYVDc/p6J/LgQYTiEyB6+F3RnXbCSNVdMhBNo54kPDnq7LhtXnlBdZ1jxqpqJ9rZpriCXRrmaBEHLm3JDlMzbxd70tCpN7dvSyhOgsc3j1rj4f2Lad4VqcGOeLLeFOg/I3C2dB+zexjuQlANcKKJHqTTvP56csaU2YBM7JjsUP2F0obnNMP48Ws8+jdVTBzRSSSX07L+LyeyNSU36kVboIH+3quvbm2Eah7oqv8+yy/OJ2srIDBjwAqZ951YW3kJN1HVWOmVebjC+HFcjl21oAgHZ1rghansliATQqjIoADzeqTusJ1FWy3Og7uASxcQAwMPSsYcij9tbGKEStWvPL84gGPVNU5FfceD77xl6aRK5jCc5cE13AyeSJUxfybeQT+Mf13lAN70g12Z6RmORHGNIyEm3quhjz7JUSdLpDJcMf7FiJHC8I/Br7FXvtvvEeOrWmNBPTcw2bostO4sQV4IiPzoZBmDjZ+Jix1imUM22YdMfX8/eOwHThP0lg/W8AAAAASUVORK5CYII=';

export const MASK_64x48 = 'iVBORw0KGgoAAAANSUhEUgAAAEAAAAAwCAAAAACEICPDAAAAL0lEQVR4nGNgGAWjYDAARmTOf2IVIgEmSl0wasCoAaMGjBoweAwYBaNgFIyCwQMAvXgBKBug9Q8AAAAASUVORK5CYII=';

export const TINY_8x8 = 'iVBORw0KGgoAAAANSUhEUgAAAAgAAAAICAIAAABLbSncAAAAFElEQVR4nGNsaGhgwAaYsIoOWgkAMBcBkGHHl6YAAAAASUVORK5CYII=';
