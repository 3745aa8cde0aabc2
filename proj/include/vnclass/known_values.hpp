#pragma once

#include <array>
#include <string_view>

namespace vnclass {

/// Published exact values of V_1, ..., V_9.
inline constexpr std::array<std::string_view, 9> kKnownValues = {
    // n = 1
    "2",
    // n = 2
    "7",
    // n = 3
    "1172",
    // n = 4
    "36325278240",
    // n = 5
    "18272974787063551687986348306336",
    // n = 6. The printed table drops the '3' at digit 69; that 83-digit
    // string is below (2^6)!/(6!)^2 and cannot be V_6. See kPrintedV6.
    "24476645869190618075507984053850609950569535168043663820595072184452353976388161"
    "5360",
    // n = 7
    "15180952473961499343965618934376718026324842119796532119190460572419587843882495"
    "85852828760086491130383087076814330944810993390346715182873926499564191493566676"
    "7135086945639514180251383218789709596490606182400",
    // n = 8
    "52765978283777071013678904065174082609325145874145576697165216116877815555488359"
    "33178423623908357448758000759193912639276150400188212162787742020239973970793668"
    "24661489931236149172145693732111500392430562009227866877508698468121554937012501"
    "45170007319691585121394921465596217271765454069675365920014984558985618461211811"
    "07228719473490069682398250329739913553176803214858296241765248986666164958696461"
    "30020407180560252107684411506255014485923878233106586773392428630175571150605101"
    "668259332096000000",
    // n = 9
    "26406741860577344209919309283156885628706831967049181290806785595207919579157820"
    "37437950049980069434393193566563858566005677100147110801386406490771604041727385"
    "05092500185193919142842736546598032225971952796396301701808139278439576519763761"
    "89311248405134486464649524304424873096846336593869765529329153737879398307495299"
    "07103612719448891227933685500589015120073976645331572860386629145652477807342113"
    "17088175814665483522871141960413322832647060844552347256373397308619125110109047"
    "50121966886667998077807262166444085531815248077692039208085217857976688733233886"
    "18856602547699721455950314400375882402318803277582933395768107346528702683280953"
    "77818137864938964385302579227441411563577111620506612132095088626377113807622856"
    "12957842071034418183218920491126482758346956851916763437800541596038772376340954"
    "10762777710784700411489926524851715616842768636445040862281728265195632138284864"
    "92418364247504800661684726454045647372343309018751738150295146135226912754254972"
    "78187729700220944579473123921157804363732035352021158448563158315772461447566153"
    "10573254703475887446938535151960478747419376566735339644354658562565959272573667"
    "714329954673314954949427200000000000",
};

/// V_6 exactly as printed in the published table (one digit short).
inline constexpr std::string_view kPrintedV6 =
    "24476645869190618075507984053850609950569535168043663820595072184452539763881615360";

/// OEIS A000653 for n = 1..6, the terms known before the Burnside formula
/// extended the table.
inline constexpr std::array<std::string_view, 6> kA000653 = {
    "2",
    "7",
    "1172",
    "36325278240",
    "18272974787063551687986348306336",
    "24476645869190618075507984053850609950569535168043663820595072184452353976388161"
    "5360",
};

} // namespace vnclass
